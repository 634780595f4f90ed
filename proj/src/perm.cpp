#include "dlk/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace dlk {

namespace {

void require_same_size(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("permutation size mismatch: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
  }
}

void require_adjacent_index(std::size_t n, std::size_t i) {
  if (i < 1 || i >= n) {
    throw std::out_of_range("adjacent transposition index " + std::to_string(i) +
                            " out of range for S_" + std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size() + 1, false);
  for (int v : word_) {
    if (v < 1 || static_cast<std::size_t>(v) > word_.size() || seen[v]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(word_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (word_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::size_t length(const Permutation& w) {
  const auto& a = w.word();
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if (a[i] > a[j]) ++inversions;
    }
  }
  return inversions;
}

Permutation longest_element(std::size_t n) {
  if (n == 0) throw std::invalid_argument("longest_element: n must be at least 1");
  std::vector<int> word(n);
  for (std::size_t i = 0; i < n; ++i) word[i] = static_cast<int>(n - i);
  return Permutation(std::move(word));
}

Permutation compose(const Permutation& w, const Permutation& v) {
  require_same_size(w, v);
  std::vector<int> word(v.size());
  for (std::size_t i = 1; i <= v.size(); ++i) word[i - 1] = w(static_cast<std::size_t>(v(i)));
  return Permutation(std::move(word));
}

Permutation inverse(const Permutation& w) {
  std::vector<int> word(w.size());
  for (std::size_t i = 1; i <= w.size(); ++i) word[w(i) - 1] = static_cast<int>(i);
  return Permutation(std::move(word));
}

Permutation simple_transposition(std::size_t n, std::size_t i) {
  return right_multiply_simple(Permutation::identity(n), i);
}

Permutation right_multiply_simple(const Permutation& w, std::size_t i) {
  require_adjacent_index(w.size(), i);
  auto word = w.word();
  std::swap(word[i - 1], word[i]);
  return Permutation(std::move(word));
}

Permutation left_multiply_simple(const Permutation& w, std::size_t i) {
  require_adjacent_index(w.size(), i);
  auto word = w.word();
  for (int& v : word) {
    if (v == static_cast<int>(i)) {
      v = static_cast<int>(i + 1);
    } else if (v == static_cast<int>(i + 1)) {
      v = static_cast<int>(i);
    }
  }
  return Permutation(std::move(word));
}

bool is_right_descent(const Permutation& w, std::size_t i) {
  require_adjacent_index(w.size(), i);
  return w(i) > w(i + 1);
}

bool is_left_descent(const Permutation& w, std::size_t i) {
  require_adjacent_index(w.size(), i);
  // i+1 appears before i in the one-line word.
  const auto& a = w.word();
  auto pos_i = std::find(a.begin(), a.end(), static_cast<int>(i));
  auto pos_next = std::find(a.begin(), a.end(), static_cast<int>(i + 1));
  return pos_next < pos_i;
}

Permutation from_word(std::size_t n, const std::vector<std::size_t>& word) {
  Permutation w = Permutation::identity(n);
  for (std::size_t i : word) w = right_multiply_simple(w, i);
  return w;
}

std::vector<std::size_t> reduced_word(const Permutation& w) {
  std::vector<std::size_t> word;
  Permutation rest = w;
  while (!rest.is_identity()) {
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (is_left_descent(rest, i)) {
        word.push_back(i);
        rest = left_multiply_simple(rest, i);
        break;
      }
    }
  }
  return word;
}

std::set<std::vector<std::size_t>> all_reduced_words(const Permutation& w) {
  std::set<std::vector<std::size_t>> words;
  std::vector<std::size_t> prefix;
  // Peel off left descents in every possible order.
  std::function<void(const Permutation&)> walk = [&](const Permutation& rest) {
    if (rest.is_identity()) {
      words.insert(prefix);
      return;
    }
    for (std::size_t i = 1; i < rest.size(); ++i) {
      if (!is_left_descent(rest, i)) continue;
      prefix.push_back(i);
      walk(left_multiply_simple(rest, i));
      prefix.pop_back();
    }
  };
  walk(w);
  return words;
}

std::size_t rank_function(const Permutation& w, std::size_t j, std::size_t i) {
  const std::size_t n = w.size();
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::out_of_range("rank_function index out of range");
  }
  std::size_t count = 0;
  for (std::size_t l = 1; l <= j; ++l) {
    if (static_cast<std::size_t>(w(l)) <= i) ++count;
  }
  return count;
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
  require_same_size(v, w);
  const std::size_t n = v.size();
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t rv = 0, rw = 0;
    for (std::size_t j = 1; j <= n; ++j) {
      if (static_cast<std::size_t>(v(j)) <= i) ++rv;
      if (static_cast<std::size_t>(w(j)) <= i) ++rw;
      if (rv < rw) return false;
    }
  }
  return true;
}

Permutation convention_translate(const Permutation& w, Convention from, Convention to) {
  const Permutation w0 = longest_element(w.size());
  // Normalise to the Omega label first.
  Permutation omega = w;
  switch (from) {
    case Convention::Omega: break;
    case Convention::X: omega = compose(w, w0); break;
    case Convention::Y: omega = compose(w0, compose(w, w0)); break;
  }
  switch (to) {
    case Convention::Omega: return omega;
    case Convention::X: return compose(omega, w0);
    case Convention::Y: return compose(w0, compose(omega, w0));
  }
  return omega;
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

Permutation embed(const Permutation& w, std::size_t m) {
  if (m < w.size()) throw std::invalid_argument("embed: target smaller than source");
  auto word = w.word();
  for (std::size_t i = w.size() + 1; i <= m; ++i) word.push_back(static_cast<int>(i));
  return Permutation(std::move(word));
}

std::string to_string(const Permutation& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(w.word()[i]);
  }
  s += ']';
  return s;
}

Permutation parse_permutation(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw std::invalid_argument("permutation must look like [3,1,2]: '" + std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<int> word;
  while (!body.empty()) {
    auto comma = body.find(',');
    std::string_view item = trim(body.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("bad permutation entry '" + std::string(item) + "'");
    }
    word.push_back(value);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
    if (trim(body).empty()) throw std::invalid_argument("trailing comma in permutation");
  }
  return Permutation(std::move(word));
}

}  // namespace dlk
