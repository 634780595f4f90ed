#include <doctest.h>

#include "dlk/perm.hpp"
#include "oracles.hpp"

using namespace dlk;

namespace {
Permutation P(std::vector<int> w) { return Permutation(std::move(w)); }
}  // namespace

TEST_CASE("construction rejects non-bijections") {
  CHECK_THROWS_AS(P({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(P({1, 3}), std::invalid_argument);
  CHECK_NOTHROW(P({2, 3, 1}));
}

TEST_CASE("length counts inversions") {
  CHECK(length(Permutation::identity(4)) == 0);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(length(longest_element(n)) == n * (n - 1) / 2);
  CHECK(length(P({2, 1, 3})) == 1);
  for (const auto& w : all_permutations(5))
    CHECK(length(w) == static_cast<std::size_t>(oracle::inversions_by_definition(w.word())));
}

TEST_CASE("longest element") {
  CHECK(longest_element(2) == P({2, 1}));
  CHECK(longest_element(3) == P({3, 2, 1}));
  CHECK(length(longest_element(4)) == 6);
  CHECK_THROWS_AS(longest_element(0), std::invalid_argument);
}

TEST_CASE("compose and inverse") {
  CHECK(compose(P({2, 1, 3}), P({2, 1, 3})).is_identity());
  const auto w = P({3, 1, 4, 2});
  CHECK(compose(w, Permutation::identity(4)) == w);
  CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
  CHECK_THROWS_AS(compose(P({1, 2}), P({1, 2, 3})), std::invalid_argument);
  for (const auto& v : all_permutations(4)) {
    CHECK(compose(v, inverse(v)).is_identity());
    CHECK(compose(inverse(v), v).is_identity());
  }
}

TEST_CASE("multiplying by s_i changes length by one") {
  for (const auto& w : all_permutations(5)) {
    for (std::size_t i = 1; i < 5; ++i) {
      const auto ws = compose(w, simple_transposition(5, i));
      CHECK(ws == right_multiply_simple(w, i));
      const long diff = static_cast<long>(length(ws)) - static_cast<long>(length(w));
      CHECK((diff == 1 || diff == -1));
      CHECK((diff == -1) == is_right_descent(w, i));
      CHECK(left_multiply_simple(w, i) == compose(simple_transposition(5, i), w));
    }
  }
}

TEST_CASE("canonical reduced word") {
  CHECK(reduced_word(Permutation::identity(3)).empty());
  CHECK(reduced_word(P({2, 1, 3})) == std::vector<std::size_t>{1});
  CHECK(reduced_word(P({3, 2, 1})) == std::vector<std::size_t>{1, 2, 1});
  for (const auto& w : all_permutations(4)) {
    const auto all = oracle::enumerate_reduced_words(w);
    CHECK(reduced_word(w) == *all.begin());  // lexicographic minimum
    CHECK(from_word(4, reduced_word(w)) == w);
  }
}

TEST_CASE("all reduced words match exhaustive enumeration") {
  CHECK(all_reduced_words(P({2, 1, 3})) == std::set<std::vector<std::size_t>>{{1}});
  const auto w0 = all_reduced_words(P({3, 2, 1}));
  CHECK(w0 == std::set<std::vector<std::size_t>>{{1, 2, 1}, {2, 1, 2}});
  CHECK(w0.size() == 2);
  CHECK(all_reduced_words(longest_element(4)).size() == 16);
  for (const auto& w : all_permutations(4)) {
    const auto words = all_reduced_words(w);
    CHECK(words == oracle::enumerate_reduced_words(w));
    for (const auto& word : words) {
      CHECK(word.size() == length(w));
      CHECK(from_word(4, word) == w);
    }
  }
}

TEST_CASE("rank function") {
  const auto e = Permutation::identity(3);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = 1; j <= 3; ++j) CHECK(rank_function(e, j, i) == std::min(i, j));
  for (const auto& w : all_permutations(4)) CHECK(rank_function(w, 4, 4) == 4);
  CHECK(rank_function(P({3, 1, 2}), 2, 1) == 1);
  CHECK_THROWS_AS(rank_function(e, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(rank_function(e, 1, 4), std::out_of_range);
}

TEST_CASE("rank function determines the permutation") {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::vector<std::size_t>> tables;
    for (const auto& w : all_permutations(n)) {
      std::vector<std::size_t> t;
      for (std::size_t j = 1; j <= n; ++j)
        for (std::size_t i = 1; i <= n; ++i) t.push_back(rank_function(w, j, i));
      tables.insert(t);
    }
    CHECK(tables.size() == all_permutations(n).size());
  }
}

TEST_CASE("Bruhat order") {
  const auto perms = all_permutations(4);
  for (const auto& w : perms) {
    CHECK(bruhat_leq(Permutation::identity(4), w));
    CHECK(bruhat_leq(w, w));
  }
  CHECK(bruhat_leq(P({2, 1, 3}), P({3, 2, 1})));
  CHECK_FALSE(bruhat_leq(P({3, 2, 1}), P({2, 1, 3})));
  CHECK_THROWS_AS(bruhat_leq(P({1, 2}), P({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("Bruhat order agrees with the subword criterion on S4") {
  const auto perms = all_permutations(4);
  for (const auto& v : perms)
    for (const auto& w : perms) CHECK(bruhat_leq(v, w) == oracle::bruhat_by_subwords(v, w));
}

TEST_CASE("labeling conventions") {
  const auto w0 = longest_element(4);
  CHECK(convention_translate(w0, Convention::Omega, Convention::X).is_identity());
  for (const auto& w : all_permutations(4)) {
    CHECK(convention_translate(w, Convention::Omega, Convention::Y) == compose(w0, compose(w, w0)));
    const auto x = convention_translate(w, Convention::Omega, Convention::X);
    CHECK(convention_translate(x, Convention::X, Convention::Omega) == w);
    const auto y = convention_translate(w, Convention::Omega, Convention::Y);
    CHECK(convention_translate(y, Convention::Y, Convention::X) == x);
  }
}

TEST_CASE("one-line notation parsing") {
  CHECK(parse_permutation("[3,1,2]") == P({3, 1, 2}));
  CHECK(parse_permutation(" [ 3, 1 ,2 ] ") == P({3, 1, 2}));
  CHECK(parse_permutation("[]").size() == 0);
  CHECK(to_string(P({3, 1, 2})) == "[3,1,2]");
  CHECK_THROWS_AS(parse_permutation("3,1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[3,,2]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[1,2,]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[1,x]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("[1,3]"), std::invalid_argument);
}
