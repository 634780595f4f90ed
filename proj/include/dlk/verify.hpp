#pragma once

#include <dlk/flagring.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace dlk {

enum class Suite { Braid, Specialize, Fgl, PointCount, Stability, All };

Suite parse_suite(std::string_view text);
std::string to_string(Suite s);

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;

  friend auto operator<=>(const CheckResult&, const CheckResult&) = default;
};

struct VerifyOptions {
  std::size_t n_bound = 3;
  std::vector<unsigned> qs{2, 3, 5};
  std::uint64_t seed = 20240611;
};

// Results sorted by (suite, name) regardless of execution order.
std::vector<CheckResult> run_verification(Suite suite, const VerifyOptions& options);

// Random element of the flag ring with small coefficients and beta powers.
FlagRingElement random_flag_element(std::size_t n, std::mt19937_64& rng, bool zero_constant_term);

}  // namespace dlk
