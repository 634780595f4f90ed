#pragma once

#include <dlk/perm.hpp>
#include <dlk/poly.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace dlk {

// Element of CK*(Fl_n) = Z[beta][x_1..x_n] / (e_1(x), ..., e_n(x)), stored in
// normal form on the staircase basis x^a, a_k <= k-1.
class FlagRingElement {
 public:
  explicit FlagRingElement(std::size_t n = 1) : n_(n) {}

  // Reduces p; p must be y-free and only use x_1..x_n.
  static FlagRingElement reduce(const BetaPolynomial& p, std::size_t n);
  static FlagRingElement x(std::size_t i, std::size_t n);
  static FlagRingElement constant(const Integer& c, std::size_t n);

  std::size_t n() const { return n_; }
  const BetaPolynomial& polynomial() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  // The x-degree-0 part (an element of Z[beta]).
  BetaPolynomial constant_term() const;

  FlagRingElement one() const { return constant(1, n_); }
  FlagRingElement scaled(const Integer& c, unsigned beta_power) const;

  friend FlagRingElement operator+(const FlagRingElement& a, const FlagRingElement& b);
  friend FlagRingElement operator-(const FlagRingElement& a, const FlagRingElement& b);
  friend FlagRingElement operator*(const FlagRingElement& a, const FlagRingElement& b);
  friend FlagRingElement operator-(const FlagRingElement& a);
  friend bool operator==(const FlagRingElement&, const FlagRingElement&) = default;

 private:
  std::size_t n_;
  BetaPolynomial poly_;
};

inline FlagRingElement normal_form(const BetaPolynomial& p, std::size_t n) {
  return FlagRingElement::reduce(p, n);
}

inline FlagRingElement ring_add(const FlagRingElement& a, const FlagRingElement& b) { return a + b; }
inline FlagRingElement ring_mul(const FlagRingElement& a, const FlagRingElement& b) { return a * b; }

FlagRingElement specialize_beta(const FlagRingElement& a, const Integer& b);

// Staircase monomials x^a, a_k <= k-1; exactly n! of them, ordered by degree.
std::vector<std::vector<unsigned>> staircase_basis(std::size_t n);

// (-)a = -a / (1 - beta a), a geometric series that terminates because a is
// nilpotent. Throws std::invalid_argument if a has a nonzero constant term.
FlagRingElement fgl_inverse(const FlagRingElement& a);

// [Omega_w] = H^{(-beta)}_w(x, 0) in normal form; codim Omega_w = l(w).
FlagRingElement schubert_class(const Permutation& w, std::size_t n);

// Coefficients in Z[beta] (polynomials in beta only).
struct SchubertExpansion {
  std::size_t n = 1;
  std::map<Permutation, BetaPolynomial> coefficients;

  friend bool operator==(const SchubertExpansion&, const SchubertExpansion&) = default;
};

class SingularTransition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// a = sum_w c_w [Omega_w]. With `beta_value` set, `a` must be beta-free and the
// classes are specialized at that beta, giving integer coefficients.
SchubertExpansion schubert_expand(const FlagRingElement& a,
                                  std::optional<long> beta_value = std::nullopt);

FlagRingElement reconstruct(const SchubertExpansion& e, std::optional<long> beta_value = std::nullopt);

// Coefficient of w0 in the Schubert expansion.
BetaPolynomial point_coefficient(const FlagRingElement& a,
                                 std::optional<long> beta_value = std::nullopt);

// Degree-d block of the Schubert-to-staircase transition at beta = 0: rows are
// permutations of length d, columns staircase monomials of degree d.
struct TransitionBlock {
  std::vector<Permutation> permutations;
  std::vector<std::vector<unsigned>> monomials;
  std::vector<std::vector<Integer>> matrix;   // matrix[w][m]
  std::vector<std::vector<Integer>> inverse;  // inverse[m][w]
};

const std::vector<TransitionBlock>& transition_blocks(std::size_t n);

}  // namespace dlk
