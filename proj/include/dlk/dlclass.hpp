#pragma once

#include <dlk/flagring.hpp>
#include <dlk/perm.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dlk {

enum class Theory { CK, CH, K0 };

std::string to_string(Theory t);
// Accepts ck/ch/k0 in any case; throws std::invalid_argument.
Theory parse_theory(std::string_view text);

struct DLQuery {
  Permutation w;
  std::size_t n = 1;
  unsigned q = 2;
  Theory theory = Theory::CK;
  // Reject q that is not a prime power instead of warning.
  bool strict = false;
};

class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Class of the closure of X(w) in CK*, CH* or K^0 of Fl_n, in Chern-class
// variables x_i = c_1(M_i).
struct DLResult {
  DLQuery query;
  FlagRingElement element;
  SchubertExpansion expansion;
  // beta value the expansion basis was specialized at (none for CK).
  std::optional<long> beta_value;
  std::map<std::string, std::string> conventions;
  std::vector<std::string> warnings;
};

bool is_prime_power(unsigned q);

// Throws InvalidQuery; returns non-fatal warnings.
std::vector<std::string> validate(const DLQuery& query);

// H^{(-beta)}_{w w0}(q (.) x_i, (-) x_{n+1-j}).
DLResult dl_class_ck(const DLQuery& query);
// S_{w w0}(q x_i, x_{n+1-j}) at beta = 0.
DLResult dl_class_ch(const DLQuery& query);
// G_{w w0}(c_1(M_i^q), c_1(M_{n+1-j}^vee)) at beta = 1, with c_1(L) = 1 - [L^vee].
DLResult dl_class_k0(const DLQuery& query);
// Dispatches on query.theory.
DLResult dl_class(const DLQuery& query);

// x_i -> -x_{n+1-i}, followed by reduction.
FlagRingElement kim_substitute(const FlagRingElement& a);
// Kim's generator convention for a Chow class; throws unless theory == CH.
FlagRingElement kim_convention(const DLResult& r);

// #Fl_n(F_q) = prod_{i=1}^n (1 + q + ... + q^{i-1}).
Integer flag_count_oracle(std::size_t n, unsigned q);

}  // namespace dlk
