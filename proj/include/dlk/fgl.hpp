#pragma once

// Multiplicative formal group law of connective K-theory,
//   a (+) b = a + b - beta a b,
// with its formal inverse and integer multiples.

#include <dlk/poly.hpp>

namespace dlk {

template <BetaAlgebra R>
R fgl_add(const R& a, const R& b) {
  return a + b + (a * b).scaled(-1, 1);
}

// n (.) a = sum_{i=1}^n C(n,i) a^i (-beta)^{i-1}.
template <BetaAlgebra R>
R n_times(unsigned n, const R& a) {
  R result = a.one().scaled(0, 0);
  R power = a;
  Integer binom = n;  // C(n, 1)
  for (unsigned i = 1; i <= n; ++i) {
    Integer c = (i % 2 == 1) ? binom : Integer(-binom);
    result = result + power.scaled(c, i - 1);
    if (i == n) break;
    binom = binom * (n - i) / (i + 1);
    power = power * a;
    if (power.is_zero()) break;
  }
  return result;
}

// a (+) a (+) ... (+) a, n times, by repeated fgl_add.
template <BetaAlgebra R>
R iterated_fgl_add(unsigned n, const R& a) {
  R result = a.one().scaled(0, 0);
  for (unsigned k = 0; k < n; ++k) result = fgl_add(a, result);
  return result;
}

}  // namespace dlk
