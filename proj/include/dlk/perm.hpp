#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dlk {

// Element of S_n in one-line notation, 1-based: w(i) = word[i-1].
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless `word` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> word);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return word_.size(); }
  const std::vector<int>& word() const { return word_; }

  // w(i) for 1 <= i <= n.
  int operator()(std::size_t i) const { return word_[i - 1]; }

  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> word_;
};

// Number of inversions; equals the codimension of the Schubert variety Omega_w.
std::size_t length(const Permutation& w);

// [n, n-1, ..., 1]. Throws on n = 0.
Permutation longest_element(std::size_t n);

// (w o v)(i) = w(v(i)).
Permutation compose(const Permutation& w, const Permutation& v);
Permutation inverse(const Permutation& w);

// The adjacent transposition s_i in S_n, 1 <= i < n.
Permutation simple_transposition(std::size_t n, std::size_t i);

// w * s_i: swaps positions i and i+1.
Permutation right_multiply_simple(const Permutation& w, std::size_t i);
// s_i * w: swaps values i and i+1.
Permutation left_multiply_simple(const Permutation& w, std::size_t i);

bool is_right_descent(const Permutation& w, std::size_t i);
bool is_left_descent(const Permutation& w, std::size_t i);

// Product s_{i_1} ... s_{i_l} in S_n.
Permutation from_word(std::size_t n, const std::vector<std::size_t>& word);

// Lexicographically smallest reduced word (i_1, ..., i_l) with w = s_{i_1}...s_{i_l}.
std::vector<std::size_t> reduced_word(const Permutation& w);

// Every reduced word of w. Exponential; meant for n <= 5.
std::set<std::vector<std::size_t>> all_reduced_words(const Permutation& w);

// r_w(j, i) = #{ l <= j : w(l) <= i }, 1 <= i, j <= n.
std::size_t rank_function(const Permutation& w, std::size_t j, std::size_t i);

// Bruhat order via the rank-matrix criterion: v <= w iff r_v >= r_w entrywise.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// Schubert-variety labeling conventions: Omega_w = X_{w w0} = Y_{w0 w w0}.
enum class Convention { Omega, X, Y };

Permutation convention_translate(const Permutation& w, Convention from, Convention to);

// All of S_n in lexicographic order of one-line words.
std::vector<Permutation> all_permutations(std::size_t n);

// Embeds w in S_m (m >= n) by fixing n+1..m.
Permutation embed(const Permutation& w, std::size_t m);

// "[3,1,2]"; parse accepts optional whitespace. Throws std::invalid_argument.
std::string to_string(const Permutation& w);
Permutation parse_permutation(std::string_view text);

}  // namespace dlk
