#pragma once

#include <dlk/perm.hpp>
#include <dlk/poly.hpp>

#include <cstddef>
#include <vector>

namespace dlk {

// beta-deformed divided difference
//   phi_i f = ((1 + beta x_{i+1}) f - (1 + beta x_i) s_i f) / (x_i - x_{i+1}).
// Acts on x only; y and beta are inert.
BetaPolynomial divided_difference(std::size_t i, const BetaPolynomial& p);

// H_{w0}(x, y) = prod_{i+j <= n} (x_i + y_j + beta x_i y_j).
BetaPolynomial top_beta_polynomial(std::size_t n);

// Double beta-polynomial H^{(beta)}_w(x, y), w in S_n. Memoized per (w, n).
// At beta = 0 it is S_w(x, -y); at beta = -1 it is G_w(x, y).
BetaPolynomial double_beta_polynomial(const Permutation& w, std::size_t n);

// Same value computed without touching the memo table.
BetaPolynomial double_beta_polynomial_uncached(const Permutation& w, std::size_t n);

// phi_{i_l} ... phi_{i_1} applied to the top polynomial of S_n.
// For a reduced word of w0*w this yields H_w.
BetaPolynomial apply_divided_differences(std::size_t n, const std::vector<std::size_t>& word);

// Double Schubert polynomial S_w(x, y) = H^{(0)}_w(x, -y).
BetaPolynomial double_schubert(const Permutation& w, std::size_t n);

// Double Grothendieck polynomial G_w(x, y) = H^{(-1)}_w(x, y).
BetaPolynomial double_grothendieck(const Permutation& w, std::size_t n);

// y_j -> 0 for all j.
BetaPolynomial drop_y(const BetaPolynomial& p);

// x_i <-> y_i.
BetaPolynomial swap_alphabets(const BetaPolynomial& p);

// y_j -> -y_j.
BetaPolynomial negate_y(const BetaPolynomial& p);

// Single Schubert polynomial by enumerating reduced pipe dreams in the
// staircase. Independent of the divided-difference recursion; n <= 5.
BetaPolynomial pipe_dream_oracle(const Permutation& w);

void clear_beta_polynomial_cache();
std::size_t beta_polynomial_cache_size();

}  // namespace dlk
