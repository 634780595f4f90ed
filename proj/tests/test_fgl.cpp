#include <doctest.h>

#include "dlk/fgl.hpp"
#include "dlk/flagring.hpp"
#include "dlk/verify.hpp"

using namespace dlk;

namespace {
const BetaPolynomial x = BetaPolynomial::x(1);
const BetaPolynomial b = BetaPolynomial::beta();
}  // namespace

TEST_CASE("formal addition") {
  const auto a = BetaPolynomial::x(1);
  const auto c = BetaPolynomial::x(2);
  CHECK(fgl_add(a, BetaPolynomial()) == a);
  CHECK(specialize_beta(fgl_add(a, c), 0) == a + c);
  CHECK(fgl_add(a, c) == a + c - b * a * c);
}

TEST_CASE("formal multiples, closed form") {
  CHECK(n_times(0, x).is_zero());
  CHECK(n_times(1, x) == x);
  CHECK(n_times(2, x) == 2 * x - b * x * x);
  CHECK(n_times(3, x) == 3 * x - 3 * b * x * x + b * b * x * x * x);
  // At beta = 1 the multiple is 1 - (1 - x)^q.
  for (unsigned q = 0; q <= 7; ++q) {
    CHECK(specialize_beta(n_times(q, x), 1) == 1 - pow(1 - x, q));
  }
}

TEST_CASE("formal multiples agree with iterated addition on free polynomials") {
  for (unsigned m = 0; m <= 8; ++m) {
    CHECK(n_times(m, x) == iterated_fgl_add(m, x));
    CHECK(n_times(m + 1, x) == fgl_add(x, n_times(m, x)));
  }
}

TEST_CASE("formal inverse in the flag ring") {
  CHECK(fgl_inverse(FlagRingElement(3)).is_zero());
  // x2^2 = 0 when n = 2, so the series stops after one term.
  CHECK(fgl_inverse(FlagRingElement::x(2, 2)) == -FlagRingElement::x(2, 2));
  CHECK_THROWS_AS(fgl_inverse(FlagRingElement::constant(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(fgl_inverse(FlagRingElement::reduce(b, 3)), std::invalid_argument);

  std::mt19937_64 rng(99);
  for (std::size_t n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_flag_element(n, rng, true);
      const auto inv = fgl_inverse(a);
      CHECK(fgl_add(inv, a).is_zero());
      CHECK(specialize_beta(inv, 0) == -specialize_beta(a, 0));
    }
  }
}

TEST_CASE("flag ring formal addition is associative and commutative") {
  std::mt19937_64 rng(4);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_flag_element(n, rng, true);
      const auto c = random_flag_element(n, rng, true);
      const auto d = random_flag_element(n, rng, true);
      CHECK(fgl_add(a, c) == fgl_add(c, a));
      CHECK(fgl_add(fgl_add(a, c), d) == fgl_add(a, fgl_add(c, d)));
    }
  }
}

TEST_CASE("multiples commute with substitution") {
  const auto target = BetaPolynomial::x(2) + b * BetaPolynomial::y(1);
  const std::map<Variable, BetaPolynomial> sigma{{xvar(1), target}};
  for (unsigned m = 0; m <= 6; ++m) {
    CHECK(substitute(n_times(m, x), sigma) == n_times(m, target));
  }
}
