#pragma once

#include <dlk/perm.hpp>
#include <dlk/poly.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace dlk {

// Environment variable consulted when --cache-dir is not given.
inline constexpr const char* kCacheDirEnv = "DLK_CACHE_DIR";

std::string sha256_hex(std::string_view data);

// On-disk polynomial store keyed by (family, w, n). Each entry is a JSON file
// carrying a format version and a SHA-256 of its canonical term list; entries
// that fail either check are reported on `warn` and ignored.
class PolynomialCache {
 public:
  static constexpr int kFormatVersion = 1;

  explicit PolynomialCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(std::string_view family, const Permutation& w, std::size_t n) const;

  std::optional<BetaPolynomial> load(std::string_view family, const Permutation& w, std::size_t n,
                                     std::ostream& warn) const;
  void store(std::string_view family, const Permutation& w, std::size_t n, const BetaPolynomial& p) const;

  // Removes every cache entry; returns how many were removed.
  std::size_t clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace dlk
