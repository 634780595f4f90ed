#include "dlk/cache.hpp"

#include "dlk/render.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dlk {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr)) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < size; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

PolynomialCache::PolynomialCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path PolynomialCache::entry_path(std::string_view family, const Permutation& w, std::size_t n) const {
  std::string name(family);
  name += "_n" + std::to_string(n) + "_";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) name += '-';
    name += std::to_string(w.word()[i]);
  }
  return dir_ / (name + ".json");
}

std::optional<BetaPolynomial> PolynomialCache::load(std::string_view family, const Permutation& w,
                                                    std::size_t n, std::ostream& warn) const {
  const fs::path path = entry_path(family, w, n);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    Json entry = Json::parse(in);
    if (entry.at("format_version").get<int>() != kFormatVersion) {
      throw std::invalid_argument("format version mismatch");
    }
    if (entry.at("family").get<std::string>() != family || entry.at("w").get<std::string>() != to_string(w) ||
        entry.at("n").get<std::size_t>() != n) {
      throw std::invalid_argument("key mismatch");
    }
    const Json& terms = entry.at("terms");
    if (sha256_hex(terms.dump()) != entry.at("checksum").get<std::string>()) {
      throw std::invalid_argument("checksum mismatch");
    }
    BetaPolynomial p = polynomial_from_json(terms);
    // Entries must already be in canonical term order.
    if (to_json(p) != terms) throw std::invalid_argument("terms not in canonical form");
    return p;
  } catch (const std::exception& e) {
    warn << "warning: discarding cache entry " << path.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

void PolynomialCache::store(std::string_view family, const Permutation& w, std::size_t n,
                            const BetaPolynomial& p) const {
  fs::create_directories(dir_);
  const Json terms = to_json(p);
  const Json entry{{"format_version", kFormatVersion},
                   {"family", family},
                   {"w", to_string(w)},
                   {"n", n},
                   {"checksum", sha256_hex(terms.dump())},
                   {"terms", terms}};
  const fs::path path = entry_path(family, w, n);
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << entry.dump() << '\n';
  }
  fs::rename(tmp, path);
}

std::size_t PolynomialCache::clear() const {
  std::size_t removed = 0;
  if (!fs::exists(dir_)) return 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".json" || ext == ".tmp")) {
      fs::remove(entry.path());
      ++removed;
    }
  }
  return removed;
}

}  // namespace dlk
