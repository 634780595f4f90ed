#include "dlk/flagring.hpp"

#include "dlk/betapoly.hpp"
#include "dlk/memo.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>

namespace dlk {

namespace {

using Exponents = std::vector<unsigned>;

void trim(Exponents& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0u); }

// Smallest k with a_k >= k, i.e. the first position violating the staircase
// bound; 0 if a is already a staircase monomial.
std::size_t first_violation(const Exponents& a) {
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (a[k - 1] >= k) return k;
  }
  return 0;
}

// Exponent vectors of the monomials of h_k(x_k, ..., x_n) other than x_k^k.
std::vector<Exponents> h_tail(std::size_t k, std::size_t n) {
  std::vector<Exponents> out;
  Exponents current(n, 0);
  std::function<void(std::size_t, unsigned)> fill = [&](std::size_t var, unsigned left) {
    if (var == n) {
      if (left == 0 && current[k - 1] != k) out.push_back(current);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      current[var] = e;
      fill(var + 1, left - e);
    }
    current[var] = 0;
  };
  fill(k - 1, static_cast<unsigned>(k));
  return out;
}

struct Reducer {
  std::size_t n;
  std::vector<std::vector<Exponents>> tails;  // tails[k-1]
  ConcurrentMemo<Exponents, BetaPolynomial> memo;

  explicit Reducer(std::size_t n_) : n(n_) {
    for (std::size_t k = 1; k <= n; ++k) tails.push_back(h_tail(k, n));
  }

  // Normal form of the beta-free monomial x^a (a trimmed).
  BetaPolynomial reduce_monomial(const Exponents& a) {
    const std::size_t k = first_violation(a);
    if (k == 0) return BetaPolynomial::term(Monomial{a, {}, 0}, 1);
    if (auto hit = memo.find(a)) return *hit;

    // x_k^k = x_k^k - h_k(x_k..x_n) modulo the ideal; the tail is lex-smaller.
    Exponents rest = a;
    rest.resize(n, 0);
    rest[k - 1] -= static_cast<unsigned>(k);
    BetaPolynomial out;
    for (const auto& u : tails[k - 1]) {
      Exponents next(n);
      for (std::size_t v = 0; v < n; ++v) next[v] = rest[v] + u[v];
      trim(next);
      out -= reduce_monomial(next);
    }
    return memo.insert(a, std::move(out));
  }
};

Reducer& reducer(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<Reducer>> table;
  std::lock_guard lock(mutex);
  auto& slot = table[n];
  if (!slot) slot = std::make_unique<Reducer>(n);
  return *slot;
}

void require_same_ring(const FlagRingElement& a, const FlagRingElement& b) {
  if (a.n() != b.n()) {
    throw std::invalid_argument("flag ring size mismatch: " + std::to_string(a.n()) + " vs " +
                                std::to_string(b.n()));
  }
}

std::size_t top_degree(std::size_t n) { return n * (n - 1) / 2; }

// Exact inverse of a square integer matrix over Q; throws unless it is integral.
std::vector<std::vector<Integer>> integer_inverse(const std::vector<std::vector<Integer>>& m) {
  const std::size_t size = m.size();
  std::vector<std::vector<mpq_class>> a(size, std::vector<mpq_class>(2 * size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) a[r][c] = m[r][c];
    a[r][size + r] = 1;
  }
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) throw SingularTransition("Schubert transition block is singular");
    std::swap(a[pivot], a[col]);
    const mpq_class inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t c = 0; c < 2 * size; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Integer>> out(size, std::vector<Integer>(size));
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      mpq_class v = a[r][size + c];
      v.canonicalize();
      if (v.get_den() != 1) {
        throw SingularTransition("Schubert transition block is not unimodular");
      }
      out[r][c] = v.get_num();
    }
  }
  return out;
}

}  // namespace

FlagRingElement FlagRingElement::reduce(const BetaPolynomial& p, std::size_t n) {
  if (n == 0) throw std::invalid_argument("flag ring needs n >= 1");
  if (p.has_y()) throw std::invalid_argument("normal_form: polynomial contains y-variables");
  if (p.max_x_index() > n) {
    throw std::invalid_argument("normal_form: x" + std::to_string(p.max_x_index()) +
                                " is not a variable of Fl_" + std::to_string(n));
  }
  Reducer& r = reducer(n);
  FlagRingElement out(n);
  for (const auto& [m, c] : p.terms()) {
    out.poly_ += r.reduce_monomial(m.x).scaled(c, m.beta);
  }
  return out;
}

FlagRingElement FlagRingElement::x(std::size_t i, std::size_t n) {
  return reduce(BetaPolynomial::x(i), n);
}

FlagRingElement FlagRingElement::constant(const Integer& c, std::size_t n) {
  FlagRingElement out(n);
  out.poly_ = BetaPolynomial(c);
  return out;
}

BetaPolynomial FlagRingElement::constant_term() const {
  BetaPolynomial out;
  for (const auto& [m, c] : poly_.terms()) {
    if (m.x.empty()) out.add_term(m, c);
  }
  return out;
}

FlagRingElement FlagRingElement::scaled(const Integer& c, unsigned beta_power) const {
  FlagRingElement out(n_);
  out.poly_ = poly_.scaled(c, beta_power);
  return out;
}

FlagRingElement operator+(const FlagRingElement& a, const FlagRingElement& b) {
  require_same_ring(a, b);
  FlagRingElement out(a.n_);
  out.poly_ = a.poly_ + b.poly_;
  return out;
}

FlagRingElement operator-(const FlagRingElement& a, const FlagRingElement& b) {
  require_same_ring(a, b);
  FlagRingElement out(a.n_);
  out.poly_ = a.poly_ - b.poly_;
  return out;
}

FlagRingElement operator*(const FlagRingElement& a, const FlagRingElement& b) {
  require_same_ring(a, b);
  return FlagRingElement::reduce(a.poly_ * b.poly_, a.n_);
}

FlagRingElement operator-(const FlagRingElement& a) {
  FlagRingElement out(a.n_);
  out.poly_ = -a.poly_;
  return out;
}

FlagRingElement specialize_beta(const FlagRingElement& a, const Integer& b) {
  return FlagRingElement::reduce(specialize_beta(a.polynomial(), b), a.n());
}

std::vector<std::vector<unsigned>> staircase_basis(std::size_t n) {
  std::vector<Exponents> out;
  Exponents current(n, 0);
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k > n) {
      Exponents e = current;
      trim(e);
      out.push_back(std::move(e));
      return;
    }
    for (unsigned e = 0; e < k; ++e) {
      current[k - 1] = e;
      fill(k + 1);
    }
    current[k - 1] = 0;
  };
  fill(1);
  MonomialOrder order;
  std::sort(out.begin(), out.end(), [&](const Exponents& a, const Exponents& b) {
    return order(Monomial{a, {}, 0}, Monomial{b, {}, 0});
  });
  return out;
}

FlagRingElement fgl_inverse(const FlagRingElement& a) {
  if (!a.constant_term().is_zero()) {
    throw std::invalid_argument("fgl_inverse: argument has a nonzero constant term");
  }
  FlagRingElement sum(a.n());
  FlagRingElement term = a;
  const std::size_t cap = top_degree(a.n()) + 1;
  std::size_t k = 0;
  while (!term.is_zero()) {
    if (k++ > cap) throw std::logic_error("fgl_inverse: series failed to terminate");
    sum = sum + term;
    term = (term * a).scaled(1, 1);
  }
  return -sum;
}

FlagRingElement schubert_class(const Permutation& w, std::size_t n) {
  static ConcurrentMemo<std::pair<Permutation, std::size_t>, FlagRingElement> memo;
  return memo.get_or_compute({w, n}, [&] {
    return FlagRingElement::reduce(drop_y(flip_beta_sign(double_beta_polynomial(w, n))), n);
  });
}

const std::vector<TransitionBlock>& transition_blocks(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const std::vector<TransitionBlock>>> table;
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(n); it != table.end()) return *it->second;
  }

  auto blocks = std::make_shared<std::vector<TransitionBlock>>(top_degree(n) + 1);
  for (const auto& m : staircase_basis(n)) (*blocks)[degree(m)].monomials.push_back(m);
  for (const auto& w : all_permutations(n)) (*blocks)[length(w)].permutations.push_back(w);

  for (auto& block : *blocks) {
    if (block.permutations.size() != block.monomials.size()) {
      throw SingularTransition("Schubert classes and staircase monomials differ in count");
    }
    for (const auto& w : block.permutations) {
      const BetaPolynomial s = specialize_beta(schubert_class(w, n), 0).polynomial();
      std::vector<Integer> row;
      for (const auto& m : block.monomials) row.push_back(s.coefficient(Monomial{m, {}, 0}));
      block.matrix.push_back(std::move(row));
    }
    // v = c M over the block, so c = v M^{-1}.
    block.inverse = integer_inverse(block.matrix);
  }

  std::lock_guard lock(mutex);
  return *table.try_emplace(n, std::move(blocks)).first->second;
}

SchubertExpansion schubert_expand(const FlagRingElement& a, std::optional<long> beta_value) {
  const std::size_t n = a.n();
  if (beta_value && a.polynomial().has_beta()) {
    throw std::invalid_argument("schubert_expand: beta-specialized expansion of an element with beta");
  }
  const auto& blocks = transition_blocks(n);
  auto class_of = [&](const Permutation& w) {
    FlagRingElement c = schubert_class(w, n);
    return beta_value ? specialize_beta(c, *beta_value) : c;
  };

  SchubertExpansion out;
  out.n = n;
  BetaPolynomial rest = a.polynomial();
  while (!rest.is_zero()) {
    const unsigned d = rest.terms().begin()->first.x_degree();
    const TransitionBlock& block = blocks.at(d);

    // Degree-d part, split by beta power: beta^k -> coordinates on the block.
    std::map<unsigned, std::vector<Integer>> slices;
    for (const auto& [m, c] : rest.terms()) {
      if (m.x_degree() != d) break;
      auto col = std::find(block.monomials.begin(), block.monomials.end(), m.x);
      if (col == block.monomials.end()) throw std::logic_error("non-staircase monomial in element");
      auto& slice = slices[m.beta];
      slice.resize(block.monomials.size());
      slice[col - block.monomials.begin()] = c;
    }

    FlagRingElement subtract(n);
    for (const auto& [k, v] : slices) {
      for (std::size_t w = 0; w < block.permutations.size(); ++w) {
        Integer c = 0;
        for (std::size_t m = 0; m < v.size(); ++m) c += v[m] * block.inverse[m][w];
        if (c == 0) continue;
        const Permutation& perm = block.permutations[w];
        out.coefficients[perm].add_term(Monomial{{}, {}, k}, c);
        subtract = subtract + class_of(perm).scaled(c, k);
      }
    }
    rest -= subtract.polynomial();
    if (!rest.is_zero() && rest.terms().begin()->first.x_degree() <= d) {
      throw std::logic_error("schubert_expand: degree filtration did not advance");
    }
  }
  std::erase_if(out.coefficients, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

FlagRingElement reconstruct(const SchubertExpansion& e, std::optional<long> beta_value) {
  FlagRingElement out(e.n);
  for (const auto& [w, c] : e.coefficients) {
    FlagRingElement cls = schubert_class(w, e.n);
    if (beta_value) cls = specialize_beta(cls, *beta_value);
    FlagRingElement coeff = FlagRingElement::reduce(c, e.n);
    if (beta_value) coeff = specialize_beta(coeff, *beta_value);
    out = out + coeff * cls;
  }
  return out;
}

BetaPolynomial point_coefficient(const FlagRingElement& a, std::optional<long> beta_value) {
  const SchubertExpansion e = schubert_expand(a, beta_value);
  auto it = e.coefficients.find(longest_element(a.n()));
  return it == e.coefficients.end() ? BetaPolynomial() : it->second;
}

}  // namespace dlk
