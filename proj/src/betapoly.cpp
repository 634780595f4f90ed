#include "dlk/betapoly.hpp"

#include "dlk/memo.hpp"

#include <stdexcept>
#include <utility>

namespace dlk {

namespace {

ConcurrentMemo<std::pair<Permutation, std::size_t>, BetaPolynomial>& cache() {
  static ConcurrentMemo<std::pair<Permutation, std::size_t>, BetaPolynomial> table;
  return table;
}

void require_in_sn(const Permutation& w, std::size_t n) {
  if (w.size() != n) {
    throw std::invalid_argument(to_string(w) + " is not an element of S_" + std::to_string(n));
  }
}

// Smallest i with w(i) < w(i+1), or 0 for w0.
std::size_t first_ascent(const Permutation& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w(i) < w(i + 1)) return i;
  }
  return 0;
}

template <class Self>
BetaPolynomial descend(const Permutation& w, std::size_t n, Self&& self) {
  const std::size_t i = first_ascent(w);
  if (i == 0) return top_beta_polynomial(n);
  return divided_difference(i, self(right_multiply_simple(w, i), n));
}

}  // namespace

BetaPolynomial divided_difference(std::size_t i, const BetaPolynomial& p) {
  if (i < 1) throw std::out_of_range("divided_difference: index must be >= 1");
  const BetaPolynomial b = BetaPolynomial::beta();
  const BetaPolynomial lhs = (BetaPolynomial(1) + b * BetaPolynomial::x(i + 1)) * p;
  const BetaPolynomial rhs = (BetaPolynomial(1) + b * BetaPolynomial::x(i)) * swap_x(p, i);
  return exact_divide_by_difference(lhs - rhs, i);
}

BetaPolynomial top_beta_polynomial(std::size_t n) {
  if (n == 0) throw std::invalid_argument("top_beta_polynomial: n must be at least 1");
  BetaPolynomial product(1);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; i + j <= n; ++j) {
      const auto x = BetaPolynomial::x(i);
      const auto y = BetaPolynomial::y(j);
      product *= x + y + BetaPolynomial::beta() * x * y;
    }
  }
  return product;
}

BetaPolynomial double_beta_polynomial(const Permutation& w, std::size_t n) {
  require_in_sn(w, n);
  auto key = std::make_pair(w, n);
  if (auto hit = cache().find(key)) return *hit;
  BetaPolynomial value = descend(w, n, [](const Permutation& v, std::size_t m) {
    return double_beta_polynomial(v, m);
  });
  return cache().insert(key, std::move(value));
}

BetaPolynomial double_beta_polynomial_uncached(const Permutation& w, std::size_t n) {
  require_in_sn(w, n);
  return descend(w, n, [](const Permutation& v, std::size_t m) {
    return double_beta_polynomial_uncached(v, m);
  });
}

BetaPolynomial apply_divided_differences(std::size_t n, const std::vector<std::size_t>& word) {
  BetaPolynomial p = top_beta_polynomial(n);
  for (std::size_t i : word) {
    if (i < 1 || i >= n) throw std::out_of_range("divided difference index out of range");
    p = divided_difference(i, p);
  }
  return p;
}

BetaPolynomial drop_y(const BetaPolynomial& p) {
  BetaPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (m.y.empty()) out.add_term(m, c);
  }
  return out;
}

BetaPolynomial swap_alphabets(const BetaPolynomial& p) {
  BetaPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(Monomial{m.y, m.x, m.beta}, c);
  return out;
}

BetaPolynomial negate_y(const BetaPolynomial& p) {
  BetaPolynomial out;
  for (const auto& [m, c] : p.terms()) out.add_term(m, m.y_degree() % 2 ? Integer(-c) : c);
  return out;
}

BetaPolynomial double_schubert(const Permutation& w, std::size_t n) {
  return negate_y(specialize_beta(double_beta_polynomial(w, n), 0));
}

BetaPolynomial double_grothendieck(const Permutation& w, std::size_t n) {
  return specialize_beta(double_beta_polynomial(w, n), -1);
}

BetaPolynomial pipe_dream_oracle(const Permutation& w) {
  const std::size_t n = w.size();
  if (n > 6) throw std::invalid_argument("pipe_dream_oracle is exhaustive; use n <= 6");
  // Staircase cells (row, col) with row + col <= n, in reading order:
  // rows top to bottom, each row right to left. A cross at (r, c) reads as s_{r+c-1}.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t c = n - r; c >= 1; --c) cells.emplace_back(r, c);
  }
  const std::size_t len = length(w);
  BetaPolynomial total;
  const std::size_t subsets = std::size_t{1} << cells.size();
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != len) continue;
    Permutation product = Permutation::identity(n);
    Monomial weight;
    weight.x.assign(n, 0);
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (!(mask >> k & 1u)) continue;
      const auto [r, c] = cells[k];
      product = right_multiply_simple(product, r + c - 1);
      ++weight.x[r - 1];
    }
    // |mask| = l(w) and product = w forces the reading word to be reduced.
    if (product == w) total += BetaPolynomial::term(weight, 1);
  }
  return total;
}

void clear_beta_polynomial_cache() { cache().clear(); }
std::size_t beta_polynomial_cache_size() { return cache().size(); }

}  // namespace dlk
