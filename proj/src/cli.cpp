#include "dlk/cli.hpp"

#include "dlk/betapoly.hpp"
#include "dlk/cache.hpp"
#include "dlk/dlclass.hpp"
#include "dlk/render.hpp"
#include "dlk/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <optional>

namespace dlk {

namespace {

enum class Format { Plain, Latex, Json };

Format parse_format(const std::string& s) {
  if (s == "latex") return Format::Latex;
  if (s == "json") return Format::Json;
  return Format::Plain;
}

// Thrown for malformed input that should exit with kExitUsage.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Permutation parse_w(const std::string& text) {
  try {
    return parse_permutation(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::optional<PolynomialCache> open_cache(const std::string& flag) {
  if (!flag.empty()) return PolynomialCache(flag);
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return PolynomialCache(env);
  return std::nullopt;
}

BetaPolynomial beta_polynomial_with_cache(const Permutation& w, std::size_t n,
                                          const std::optional<PolynomialCache>& cache, std::ostream& err) {
  if (cache) {
    if (auto hit = cache->load("H", w, n, err)) return *hit;
  }
  BetaPolynomial p = double_beta_polynomial(w, n);
  if (cache) cache->store("H", w, n, p);
  return p;
}

struct BetapolyArgs {
  std::string w;
  std::size_t n = 0;
  bool single = false;
  bool dbl = false;
  std::string beta = "formal";
  std::string family = "h";
  std::string format = "plain";
};

int cmd_betapoly(const BetapolyArgs& a, const std::string& cache_dir, std::ostream& out, std::ostream& err) {
  const Permutation w = parse_w(a.w);
  const std::size_t n = a.n ? a.n : w.size();
  if (w.size() != n) throw InvalidQuery(to_string(w) + " is not an element of S_" + std::to_string(n));
  if (a.single && a.dbl) throw InvalidQuery("--single and --double are mutually exclusive");
  if (a.family != "h" && a.beta != "formal") {
    throw InvalidQuery("--beta only applies to --family h");
  }

  const BetaPolynomial h = beta_polynomial_with_cache(w, n, open_cache(cache_dir), err);
  BetaPolynomial p;
  std::string symbol;
  if (a.family == "schubert") {
    p = negate_y(specialize_beta(h, 0));
    symbol = "\\mathfrak{S}";
  } else if (a.family == "grothendieck") {
    p = specialize_beta(h, -1);
    symbol = "\\mathfrak{G}";
  } else {
    p = a.beta == "formal" ? h : specialize_beta(h, std::stol(a.beta));
    symbol = "\\mathfrak{H}";
  }
  if (a.single) p = drop_y(p);

  switch (parse_format(a.format)) {
    case Format::Plain: out << to_plain(p) << '\n'; break;
    case Format::Latex: out << to_latex(p) << '\n'; break;
    case Format::Json: {
      Json j{{"family", a.family}, {"symbol", symbol}, {"w", to_string(w)}, {"n", n},
             {"beta", a.beta},     {"single", a.single}, {"terms", to_json(p)}};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

struct DlclassArgs {
  std::string w;
  std::size_t n = 0;
  std::vector<unsigned> qs;
  std::string theory = "ck";
  bool expand = false;
  bool kim = false;
  bool strict = false;
  std::string format = "plain";
};

int cmd_dlclass(const DlclassArgs& a, std::ostream& out, std::ostream& err) {
  const Permutation w = parse_w(a.w);
  const std::size_t n = a.n ? a.n : w.size();
  Theory theory;
  try {
    theory = parse_theory(a.theory);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.kim && theory != Theory::CH) throw InvalidQuery("--kim requires --theory ch");

  const Format format = parse_format(a.format);
  Json json_results = Json::array();
  for (unsigned q : a.qs) {
    const DLResult r = dl_class(DLQuery{w, n, q, theory, a.strict});
    for (const auto& warning : r.warnings) err << "warning: " << warning << '\n';
    std::optional<FlagRingElement> kim;
    if (a.kim) kim = kim_convention(r);
    const BetaPolynomial point = [&] {
      auto it = r.expansion.coefficients.find(longest_element(n));
      return it == r.expansion.coefficients.end() ? BetaPolynomial() : it->second;
    }();

    switch (format) {
      case Format::Plain:
        out << "w = " << to_string(w) << ", n = " << n << ", q = " << q << ", theory = " << to_string(theory)
            << '\n';
        out << "class: " << to_plain(r.element.polynomial()) << '\n';
        if (a.expand) {
          out << "expansion:\n" << expansion_to_plain(r.expansion);
          out << "point coefficient: " << to_plain(point) << '\n';
        }
        if (kim) out << "kim: " << to_plain(kim->polynomial()) << '\n';
        break;
      case Format::Latex:
        out << to_latex(r.element.polynomial());
        if (a.expand) out << " = " << expansion_to_latex(r.expansion);
        out << '\n';
        if (kim) out << to_latex(kim->polynomial()) << '\n';
        break;
      case Format::Json: {
        Json j = to_json(r);
        j["point_coefficient"] = to_json(point);
        if (kim) j["kim"] = to_json(*kim);
        json_results.push_back(std::move(j));
        break;
      }
    }
  }
  if (format == Format::Json) {
    out << (json_results.size() == 1 ? json_results[0] : json_results).dump(2) << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite = "all";
  std::size_t n = 3;
  std::vector<unsigned> qs{2, 3, 5};
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  Suite suite;
  try {
    suite = parse_suite(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  VerifyOptions options;
  options.n_bound = a.n;
  options.qs = a.qs;
  const auto results = run_verification(suite, options);

  std::size_t failed = 0;
  Json checks = Json::array();
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    Json c{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}};
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(std::move(c));
  }
  Json report{{"suite", to_string(suite)},
              {"n", a.n},
              {"q", a.qs},
              {"checks", checks},
              {"passed", results.size() - failed},
              {"failed", failed},
              {"status", failed ? "fail" : "pass"}};
  out << report.dump(2) << '\n';
  return failed ? kExitVerificationFailed : kExitOk;
}

int cmd_cache_clear(const std::string& cache_dir, std::ostream& out) {
  auto cache = open_cache(cache_dir);
  if (!cache) {
    throw InvalidQuery(std::string("no cache directory: pass --cache-dir or set ") + kCacheDirEnv);
  }
  out << "removed " << cache->clear() << " cache entries from " << cache->directory().string() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double beta-polynomials and Deligne-Lusztig classes of Fl_n", "dlk"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, std::string("Polynomial cache directory (default $") + kCacheDirEnv + ")");

  const std::vector<std::string> formats{"plain", "latex", "json"};

  BetapolyArgs bp;
  auto* betapoly = app.add_subcommand("betapoly", "Print a double beta-, Schubert or Grothendieck polynomial");
  betapoly->add_option("--w", bp.w, "Permutation in one-line notation, e.g. \"[3,1,2]\"")->required();
  betapoly->add_option("--n", bp.n, "Rank n (default: length of w)");
  betapoly->add_flag("--double", bp.dbl, "Two alphabets x, y (default)");
  betapoly->add_flag("--single", bp.single, "Set y = 0");
  betapoly->add_option("--beta", bp.beta, "formal, 0, -1 or 1")
      ->check(CLI::IsMember({"formal", "0", "-1", "1"}));
  betapoly->add_option("--family", bp.family, "h, schubert or grothendieck")
      ->check(CLI::IsMember({"h", "schubert", "grothendieck"}));
  betapoly->add_option("--format", bp.format)->check(CLI::IsMember(formats));

  DlclassArgs dl;
  auto* dlclass = app.add_subcommand("dlclass", "Class of the closure of a Deligne-Lusztig variety");
  dlclass->add_option("--w", dl.w, "Permutation in one-line notation")->required();
  dlclass->add_option("--n", dl.n, "Rank n (default: length of w)");
  dlclass->add_option("--q", dl.qs, "Field size q; a comma-separated list evaluates each")
      ->required()
      ->delimiter(',');
  dlclass->add_option("--theory", dl.theory, "ck, ch or k0");
  dlclass->add_flag("--expand", dl.expand, "Print the Schubert expansion");
  dlclass->add_flag("--kim", dl.kim, "Also print the class in Kim's convention (theory ch)");
  dlclass->add_flag("--strict", dl.strict, "Reject q that is not a prime power");
  dlclass->add_option("--format", dl.format)->check(CLI::IsMember(formats));

  VerifyArgs vf;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", vf.suite, "braid, specialize, fgl, pointcount, stability or all")
      ->check(CLI::IsMember({"braid", "specialize", "fgl", "pointcount", "stability", "all"}));
  verify->add_option("--n", vf.n, "Largest n to check");
  verify->add_option("--q", vf.qs, "q values for pointcount")->delimiter(',');

  auto* cache = app.add_subcommand("cache", "Manage the polynomial cache");
  cache->require_subcommand(1);
  auto* cache_clear = cache->add_subcommand("clear", "Remove all cache entries");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (*betapoly) return cmd_betapoly(bp, cache_dir, out, err);
    if (*dlclass) return cmd_dlclass(dl, out, err);
    if (*verify) return cmd_verify(vf, out);
    if (*cache_clear) return cmd_cache_clear(cache_dir, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidParameter;
  }
  return kExitUsage;
}

}  // namespace dlk
