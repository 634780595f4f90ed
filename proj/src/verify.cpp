#include "dlk/verify.hpp"

#include "dlk/betapoly.hpp"
#include "dlk/dlclass.hpp"
#include "dlk/fgl.hpp"
#include "dlk/render.hpp"

#include <algorithm>
#include <future>

namespace dlk {

namespace {

CheckResult check(std::string suite, std::string name, bool passed, std::string detail = {}) {
  return {std::move(suite), std::move(name), passed, std::move(detail)};
}

std::string label(std::size_t n, const Permutation& w) {
  return "n=" + std::to_string(n) + " w=" + to_string(w);
}

std::vector<CheckResult> braid_suite(std::size_t bound) {
  std::vector<std::future<CheckResult>> jobs;
  for (std::size_t n = 1; n <= bound; ++n) {
    for (const auto& w : all_permutations(n)) {
      jobs.push_back(std::async(std::launch::async, [n, w] {
        const BetaPolynomial expected = double_beta_polynomial(w, n);
        const auto words = all_reduced_words(compose(longest_element(n), w));
        for (const auto& word : words) {
          if (apply_divided_differences(n, word) != expected) {
            std::string wstr;
            for (auto i : word) wstr += std::to_string(i);
            return check("braid", label(n, w), false, "word " + wstr + " disagrees");
          }
        }
        return check("braid", label(n, w), true, std::to_string(words.size()) + " reduced words");
      }));
    }
  }
  std::vector<CheckResult> out;
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

std::vector<CheckResult> specialize_suite(std::size_t bound) {
  std::vector<CheckResult> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    for (const auto& w : all_permutations(n)) {
      const BetaPolynomial h = double_beta_polynomial(w, n);
      const BetaPolynomial schubert = drop_y(double_schubert(w, n));
      out.push_back(check("specialize", label(n, w) + " pipe-dreams", schubert == pipe_dream_oracle(w)));

      const long len = static_cast<long>(length(w));
      const bool graded = std::all_of(h.terms().begin(), h.terms().end(),
                                      [&](const auto& t) { return t.first.graded_degree() == len; });
      const BetaPolynomial low = lowest_degree_component(h);
      const bool lowest = !low.is_zero() && !low.has_beta() &&
                          low.terms().begin()->first.x_degree() + low.terms().begin()->first.y_degree() ==
                              static_cast<unsigned>(len);
      out.push_back(check("specialize", label(n, w) + " grading", graded && lowest));

      const BetaPolynomial g_low = lowest_degree_component(double_grothendieck(w, n));
      out.push_back(check("specialize", label(n, w) + " grothendieck-lowest",
                          g_low == negate_y(double_schubert(w, n))));
    }
  }
  return out;
}

std::vector<CheckResult> fgl_suite(std::size_t bound, std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);
  for (std::size_t n = 1; n <= bound; ++n) {
    const std::string prefix = "n=" + std::to_string(n) + " ";
    for (const auto& a : staircase_basis(n)) {
      if (a.empty()) continue;
      const auto gen = FlagRingElement::reduce(BetaPolynomial::term(Monomial{a, {}, 0}, 1), n);
      const bool ok = fgl_add(fgl_inverse(gen), gen).is_zero();
      out.push_back(check("fgl", prefix + "inverse " + to_plain(gen.polynomial()), ok));
    }
    for (int k = 0; k < 20; ++k) {
      const auto a = random_flag_element(n, rng, true);
      const bool ok = fgl_add(fgl_inverse(a), a).is_zero();
      out.push_back(check("fgl", prefix + "inverse random#" + (k < 10 ? "0" : "") + std::to_string(k), ok));
    }
    for (std::size_t i = 1; i <= n; ++i) {
      const auto x = FlagRingElement::x(i, n);
      bool closed_form = true;
      bool induction = true;
      for (unsigned m = 0; m <= 8; ++m) {
        closed_form = closed_form && n_times(m, x) == iterated_fgl_add(m, x);
        induction = induction && n_times(m + 1, x) == fgl_add(x, n_times(m, x));
      }
      out.push_back(check("fgl", prefix + "n_times x" + std::to_string(i), closed_form && induction));
    }
  }
  return out;
}

std::vector<CheckResult> pointcount_suite(std::size_t bound, const std::vector<unsigned>& qs) {
  std::vector<CheckResult> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    for (unsigned q : qs) {
      DLQuery query{Permutation::identity(n), n, q, Theory::CH, false};
      const BetaPolynomial c = point_coefficient(dl_class_ch(query).element, 0);
      const Integer expected = flag_count_oracle(n, q);
      out.push_back(check("pointcount", "n=" + std::to_string(n) + " q=" + std::to_string(q),
                          c == BetaPolynomial(expected),
                          "got " + to_plain(c) + ", expected " + expected.get_str()));
    }
  }
  return out;
}

std::vector<CheckResult> stability_suite(std::size_t bound) {
  std::vector<CheckResult> out;
  for (std::size_t n = 1; n < bound; ++n) {
    for (const auto& w : all_permutations(n)) {
      const bool ok = double_beta_polynomial(w, n) == double_beta_polynomial(embed(w, n + 1), n + 1);
      out.push_back(check("stability", label(n, w) + " -> S_" + std::to_string(n + 1), ok));
    }
  }
  return out;
}

}  // namespace

Suite parse_suite(std::string_view text) {
  if (text == "braid") return Suite::Braid;
  if (text == "specialize") return Suite::Specialize;
  if (text == "fgl") return Suite::Fgl;
  if (text == "pointcount") return Suite::PointCount;
  if (text == "stability") return Suite::Stability;
  if (text == "all") return Suite::All;
  throw std::invalid_argument("unknown suite '" + std::string(text) + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Braid: return "braid";
    case Suite::Specialize: return "specialize";
    case Suite::Fgl: return "fgl";
    case Suite::PointCount: return "pointcount";
    case Suite::Stability: return "stability";
    case Suite::All: return "all";
  }
  return "all";
}

FlagRingElement random_flag_element(std::size_t n, std::mt19937_64& rng, bool zero_constant_term) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> beta(0, 2);
  std::bernoulli_distribution keep(0.5);
  BetaPolynomial p;
  for (const auto& a : staircase_basis(n)) {
    if (zero_constant_term && a.empty()) continue;
    if (!keep(rng)) continue;
    p.add_term(Monomial{a, {}, beta(rng)}, coeff(rng));
  }
  return FlagRingElement::reduce(p, n);
}

std::vector<CheckResult> run_verification(Suite suite, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> part) { out.insert(out.end(), part.begin(), part.end()); };
  const bool all = suite == Suite::All;
  if (all || suite == Suite::Braid) append(braid_suite(options.n_bound));
  if (all || suite == Suite::Specialize) append(specialize_suite(options.n_bound));
  if (all || suite == Suite::Fgl) append(fgl_suite(options.n_bound, options.seed));
  if (all || suite == Suite::PointCount) append(pointcount_suite(options.n_bound, options.qs));
  if (all || suite == Suite::Stability) append(stability_suite(options.n_bound));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dlk
