#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

namespace dlk {

using Integer = mpz_class;

// x^a y^b beta^k. Exponent vectors are 0-based storage for x_1.., y_1..,
// with trailing zeros trimmed so equal monomials compare equal.
struct Monomial {
  std::vector<unsigned> x;
  std::vector<unsigned> y;
  unsigned beta = 0;

  unsigned x_exp(std::size_t i) const { return i >= 1 && i <= x.size() ? x[i - 1] : 0; }
  unsigned y_exp(std::size_t j) const { return j >= 1 && j <= y.size() ? y[j - 1] : 0; }

  unsigned x_degree() const;
  unsigned y_degree() const;
  // |x| + |y| - beta (deg beta = -1).
  long graded_degree() const;

  void normalize();

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

// Canonical term order: ascending |x|+|y|, then x exponents lexicographically
// descending, then y exponents descending, then ascending beta power.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class BetaPolynomial;

enum class VariableKind { X, Y };

struct Variable {
  VariableKind kind;
  std::size_t index;  // 1-based

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

inline Variable xvar(std::size_t i) { return {VariableKind::X, i}; }
inline Variable yvar(std::size_t j) { return {VariableKind::Y, j}; }

class DivisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact sparse polynomial in x_1.., y_1.. with coefficients in Z[beta].
class BetaPolynomial {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialOrder>;

  BetaPolynomial() = default;
  BetaPolynomial(long c);  // NOLINT: constants convert implicitly
  BetaPolynomial(const Integer& c);  // NOLINT

  static BetaPolynomial term(Monomial m, const Integer& c);
  static BetaPolynomial x(std::size_t i);
  static BetaPolynomial y(std::size_t j);
  static BetaPolynomial variable(Variable v);
  static BetaPolynomial beta();

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Coefficient of a monomial (zero if absent).
  Integer coefficient(const Monomial& m) const;

  // Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  bool has_y() const;
  bool has_beta() const;
  // Largest x (resp. y) index with a nonzero exponent; 0 if none.
  std::size_t max_x_index() const;
  std::size_t max_y_index() const;

  BetaPolynomial& operator+=(const BetaPolynomial& o);
  BetaPolynomial& operator-=(const BetaPolynomial& o);
  BetaPolynomial& operator*=(const BetaPolynomial& o);

  friend BetaPolynomial operator+(BetaPolynomial a, const BetaPolynomial& b) { return a += b; }
  friend BetaPolynomial operator-(BetaPolynomial a, const BetaPolynomial& b) { return a -= b; }
  friend BetaPolynomial operator*(const BetaPolynomial& a, const BetaPolynomial& b);
  friend BetaPolynomial operator-(const BetaPolynomial& a);
  friend bool operator==(const BetaPolynomial&, const BetaPolynomial&) = default;

  // c * beta^k * this
  BetaPolynomial scaled(const Integer& c, unsigned beta_power) const;
  BetaPolynomial one() const { return BetaPolynomial(1); }

 private:
  TermMap terms_;
};

BetaPolynomial pow(const BetaPolynomial& p, unsigned e);

inline BetaPolynomial add(const BetaPolynomial& p, const BetaPolynomial& q) { return p + q; }
inline BetaPolynomial mul(const BetaPolynomial& p, const BetaPolynomial& q) { return p * q; }
inline BetaPolynomial neg(const BetaPolynomial& p) { return -p; }

// Every beta^k becomes b^k.
BetaPolynomial specialize_beta(const BetaPolynomial& p, const Integer& b);

// beta -> -beta.
BetaPolynomial flip_beta_sign(const BetaPolynomial& p);

// s_i: swaps x_i and x_{i+1}.
BetaPolynomial swap_x(const BetaPolynomial& p, std::size_t i);

// p / (x_i - x_{i+1}); throws DivisionError if the remainder is nonzero.
BetaPolynomial exact_divide_by_difference(const BetaPolynomial& p, std::size_t i);

// Terms whose x,y-degree is minimal.
BetaPolynomial lowest_degree_component(const BetaPolynomial& p);

// Ring admitting the Z[beta]-module operations substitution needs.
template <class R>
concept BetaAlgebra = std::copyable<R> && requires(const R& a, const Integer& c, unsigned k) {
  { a + a } -> std::convertible_to<R>;
  { a - a } -> std::convertible_to<R>;
  { a * a } -> std::convertible_to<R>;
  { a.scaled(c, k) } -> std::convertible_to<R>;
  { a.one() } -> std::convertible_to<R>;
  { a.is_zero() } -> std::convertible_to<bool>;
};

class UnmappedVariable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ring homomorphism x_i, y_j -> sigma(...), beta fixed. `one` is the unit of
// the target ring.
template <BetaAlgebra R>
R substitute(const BetaPolynomial& p, const std::map<Variable, R>& sigma, const R& one) {
  std::map<Variable, std::vector<R>> powers;
  auto power = [&](Variable v, unsigned e) -> const R& {
    auto it = sigma.find(v);
    if (it == sigma.end()) {
      throw UnmappedVariable(std::string(v.kind == VariableKind::X ? "x" : "y") +
                             std::to_string(v.index) + " has no image");
    }
    auto& table = powers[v];
    if (table.empty()) table.push_back(one);
    while (table.size() <= e) table.push_back(table.back() * it->second);
    return table[e];
  };

  R result = one.scaled(0, 0);
  for (const auto& [m, c] : p.terms()) {
    R acc = one.scaled(c, m.beta);
    for (std::size_t i = 1; i <= m.x.size(); ++i) {
      if (m.x[i - 1]) acc = acc * power(xvar(i), m.x[i - 1]);
    }
    for (std::size_t j = 1; j <= m.y.size(); ++j) {
      if (m.y[j - 1]) acc = acc * power(yvar(j), m.y[j - 1]);
    }
    result = result + acc;
  }
  return result;
}

inline BetaPolynomial substitute(const BetaPolynomial& p,
                                 const std::map<Variable, BetaPolynomial>& sigma) {
  return substitute<BetaPolynomial>(p, sigma, BetaPolynomial(1));
}

}  // namespace dlk
