#include "dlk/poly.hpp"

#include <algorithm>

namespace dlk {

namespace {

void trim(std::vector<unsigned>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

unsigned sum(const std::vector<unsigned>& v) {
  unsigned s = 0;
  for (unsigned e : v) s += e;
  return s;
}

std::vector<unsigned> add_exponents(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  std::vector<unsigned> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// Lexicographic comparison of zero-padded exponent vectors.
int compare_padded(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < len; ++i) {
    unsigned ai = i < a.size() ? a[i] : 0;
    unsigned bi = i < b.size() ? b[i] : 0;
    if (ai != bi) return ai < bi ? -1 : 1;
  }
  return 0;
}

void set_exp(std::vector<unsigned>& v, std::size_t i, unsigned e) {
  if (v.size() < i) v.resize(i, 0);
  v[i - 1] = e;
}

}  // namespace

unsigned Monomial::x_degree() const { return sum(x); }
unsigned Monomial::y_degree() const { return sum(y); }

long Monomial::graded_degree() const {
  return static_cast<long>(x_degree()) + static_cast<long>(y_degree()) - static_cast<long>(beta);
}

void Monomial::normalize() {
  trim(x);
  trim(y);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m{add_exponents(a.x, b.x), add_exponents(a.y, b.y), a.beta + b.beta};
  m.normalize();
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.x_degree() + a.y_degree();
  const unsigned db = b.x_degree() + b.y_degree();
  if (da != db) return da < db;
  if (int c = compare_padded(a.x, b.x)) return c > 0;
  if (int c = compare_padded(a.y, b.y)) return c > 0;
  return a.beta < b.beta;
}

BetaPolynomial::BetaPolynomial(long c) : BetaPolynomial(Integer(c)) {}

BetaPolynomial::BetaPolynomial(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

BetaPolynomial BetaPolynomial::term(Monomial m, const Integer& c) {
  m.normalize();
  BetaPolynomial p;
  p.add_term(m, c);
  return p;
}

BetaPolynomial BetaPolynomial::x(std::size_t i) {
  Monomial m;
  set_exp(m.x, i, 1);
  return term(std::move(m), 1);
}

BetaPolynomial BetaPolynomial::y(std::size_t j) {
  Monomial m;
  set_exp(m.y, j, 1);
  return term(std::move(m), 1);
}

BetaPolynomial BetaPolynomial::variable(Variable v) {
  return v.kind == VariableKind::X ? x(v.index) : y(v.index);
}

BetaPolynomial BetaPolynomial::beta() { return term(Monomial{{}, {}, 1}, 1); }

Integer BetaPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void BetaPolynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool BetaPolynomial::has_y() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.first.y.empty(); });
}

bool BetaPolynomial::has_beta() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.beta != 0; });
}

std::size_t BetaPolynomial::max_x_index() const {
  std::size_t m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.x.size());
  return m;
}

std::size_t BetaPolynomial::max_y_index() const {
  std::size_t m = 0;
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.y.size());
  return m;
}

BetaPolynomial& BetaPolynomial::operator+=(const BetaPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BetaPolynomial& BetaPolynomial::operator-=(const BetaPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BetaPolynomial& BetaPolynomial::operator*=(const BetaPolynomial& o) {
  *this = *this * o;
  return *this;
}

BetaPolynomial operator*(const BetaPolynomial& a, const BetaPolynomial& b) {
  BetaPolynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

BetaPolynomial operator-(const BetaPolynomial& a) {
  BetaPolynomial out = a;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

BetaPolynomial BetaPolynomial::scaled(const Integer& c, unsigned beta_power) const {
  BetaPolynomial out;
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) {
    Monomial shifted = m;
    shifted.beta += beta_power;
    out.terms_.emplace_hint(out.terms_.end(), std::move(shifted), coeff * c);
  }
  return out;
}

BetaPolynomial pow(const BetaPolynomial& p, unsigned e) {
  BetaPolynomial result(1);
  BetaPolynomial base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

BetaPolynomial specialize_beta(const BetaPolynomial& p, const Integer& b) {
  BetaPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), b.get_mpz_t(), m.beta);
    Monomial stripped = m;
    stripped.beta = 0;
    out.add_term(stripped, c * scale);
  }
  return out;
}

BetaPolynomial flip_beta_sign(const BetaPolynomial& p) {
  BetaPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, m.beta % 2 ? Integer(-c) : c);
  return out;
}

BetaPolynomial swap_x(const BetaPolynomial& p, std::size_t i) {
  if (i < 1) throw std::out_of_range("swap_x: index must be >= 1");
  BetaPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial s = m;
    if (s.x.size() < i + 1) s.x.resize(i + 1, 0);
    std::swap(s.x[i - 1], s.x[i]);
    s.normalize();
    out.add_term(s, c);
  }
  return out;
}

BetaPolynomial exact_divide_by_difference(const BetaPolynomial& p, std::size_t i) {
  if (i < 1) throw std::out_of_range("exact_divide_by_difference: index must be >= 1");
  // Write p = sum_d c_d x_i^d. Then p = (x_i - x_{i+1}) * sum_d c_d h_{d-1}(x_i, x_{i+1})
  // + p|_{x_i = x_{i+1}}, and the last term must vanish.
  BetaPolynomial quotient;
  BetaPolynomial remainder;
  for (const auto& [m, c] : p.terms()) {
    const unsigned d = m.x_exp(i);
    Monomial base = m;
    if (base.x.size() < i + 1) base.x.resize(i + 1, 0);
    const unsigned next = base.x[i];
    base.x[i - 1] = 0;
    base.x[i] = 0;

    Monomial collapsed = base;
    collapsed.x[i] = next + d;
    collapsed.normalize();
    remainder.add_term(collapsed, c);

    for (unsigned k = 0; k < d; ++k) {
      Monomial q = base;
      q.x[i - 1] = k;
      q.x[i] = next + (d - 1 - k);
      q.normalize();
      quotient.add_term(q, c);
    }
  }
  if (!remainder.is_zero()) {
    throw DivisionError("polynomial is not divisible by x" + std::to_string(i) + " - x" +
                        std::to_string(i + 1));
  }
  return quotient;
}

BetaPolynomial lowest_degree_component(const BetaPolynomial& p) {
  BetaPolynomial out;
  if (p.is_zero()) return out;
  // Terms are sorted by ascending x,y-degree.
  const unsigned low = p.terms().begin()->first.x_degree() + p.terms().begin()->first.y_degree();
  for (const auto& [m, c] : p.terms()) {
    if (m.x_degree() + m.y_degree() != low) break;
    out.add_term(m, c);
  }
  return out;
}

}  // namespace dlk
