#include "dlk/dlclass.hpp"

#include "dlk/betapoly.hpp"
#include "dlk/fgl.hpp"

#include <algorithm>
#include <cctype>

namespace dlk {

namespace {

Permutation w_times_w0(const Permutation& w) { return compose(w, longest_element(w.size())); }

std::map<std::string, std::string> base_conventions() {
  return {
      {"basis", "staircase x^a with a_k <= k-1; relations e_i(x) = 0"},
      {"variables", "x_i = c_1(M_i), M_i = Ker(Q_i -> Q_{i-1})"},
      {"schubert_index", "Omega_w, codim = l(w)"},
      {"formal_group_law", "a + b - beta a b"},
  };
}

DLResult make_result(const DLQuery& query, FlagRingElement element, std::optional<long> beta_value,
                     std::vector<std::string> warnings) {
  DLResult r{query, std::move(element), {}, beta_value, base_conventions(), std::move(warnings)};
  r.expansion = schubert_expand(r.element, beta_value);
  return r;
}

// Powers x, x^2, ... of a nilpotent element until they vanish, summed.
FlagRingElement nilpotent_geometric_tail(const FlagRingElement& x) {
  FlagRingElement sum(x.n());
  for (FlagRingElement term = x; !term.is_zero(); term = term * x) sum = sum + term;
  return sum;
}

}  // namespace

std::string to_string(Theory t) {
  switch (t) {
    case Theory::CK: return "ck";
    case Theory::CH: return "ch";
    case Theory::K0: return "k0";
  }
  return "ck";
}

Theory parse_theory(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "ck") return Theory::CK;
  if (lower == "ch") return Theory::CH;
  if (lower == "k0") return Theory::K0;
  throw std::invalid_argument("unknown theory '" + std::string(text) + "' (expected ck, ch or k0)");
}

bool is_prime_power(unsigned q) {
  if (q < 2) return false;
  for (unsigned p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

std::vector<std::string> validate(const DLQuery& query) {
  if (query.n == 0) throw InvalidQuery("n must be at least 1");
  if (query.w.size() != query.n) {
    throw InvalidQuery(to_string(query.w) + " is not an element of S_" + std::to_string(query.n));
  }
  if (query.q < 2) throw InvalidQuery("q must be at least 2");
  std::vector<std::string> warnings;
  if (!is_prime_power(query.q)) {
    const std::string msg = "q = " + std::to_string(query.q) + " is not a prime power";
    if (query.strict) throw InvalidQuery(msg);
    warnings.push_back(msg + "; evaluating the polynomial identity anyway");
  }
  return warnings;
}

DLResult dl_class_ck(const DLQuery& query) {
  auto warnings = validate(query);
  const std::size_t n = query.n;
  const BetaPolynomial h = flip_beta_sign(double_beta_polynomial(w_times_w0(query.w), n));

  std::map<Variable, FlagRingElement> sigma;
  for (std::size_t i = 1; i <= n; ++i) {
    sigma.emplace(xvar(i), n_times(query.q, FlagRingElement::x(i, n)));
    sigma.emplace(yvar(i), fgl_inverse(FlagRingElement::x(n + 1 - i, n)));
  }
  FlagRingElement element = substitute(h, sigma, FlagRingElement::constant(1, n));

  DLQuery q = query;
  q.theory = Theory::CK;
  return make_result(q, std::move(element), std::nullopt, std::move(warnings));
}

DLResult dl_class_ch(const DLQuery& query) {
  auto warnings = validate(query);
  const std::size_t n = query.n;
  const BetaPolynomial s = double_schubert(w_times_w0(query.w), n);

  std::map<Variable, FlagRingElement> sigma;
  for (std::size_t i = 1; i <= n; ++i) {
    sigma.emplace(xvar(i), FlagRingElement::x(i, n).scaled(query.q, 0));
    sigma.emplace(yvar(i), FlagRingElement::x(n + 1 - i, n));
  }
  FlagRingElement element = substitute(s, sigma, FlagRingElement::constant(1, n));

  DLQuery q = query;
  q.theory = Theory::CH;
  return make_result(q, std::move(element), 0, std::move(warnings));
}

DLResult dl_class_k0(const DLQuery& query) {
  auto warnings = validate(query);
  const std::size_t n = query.n;
  const BetaPolynomial g = double_grothendieck(w_times_w0(query.w), n);

  // At beta = 1: c_1(L^q) = 1 - (1 - x)^q and c_1(L^vee) = -x / (1 - x).
  std::map<Variable, FlagRingElement> sigma;
  for (std::size_t i = 1; i <= n; ++i) {
    const BetaPolynomial one_minus_x = BetaPolynomial(1) - BetaPolynomial::x(i);
    sigma.emplace(xvar(i), normal_form(BetaPolynomial(1) - pow(one_minus_x, query.q), n));
    sigma.emplace(yvar(i), -nilpotent_geometric_tail(FlagRingElement::x(n + 1 - i, n)));
  }
  FlagRingElement element = substitute(g, sigma, FlagRingElement::constant(1, n));

  DLQuery q = query;
  q.theory = Theory::K0;
  DLResult r = make_result(q, std::move(element), 1, std::move(warnings));
  r.conventions["k_theory_reading"] = "x_i = c_1(M_i) = 1 - [M_i^vee]";
  return r;
}

DLResult dl_class(const DLQuery& query) {
  switch (query.theory) {
    case Theory::CK: return dl_class_ck(query);
    case Theory::CH: return dl_class_ch(query);
    case Theory::K0: return dl_class_k0(query);
  }
  throw InvalidQuery("unknown theory");
}

FlagRingElement kim_substitute(const FlagRingElement& a) {
  const std::size_t n = a.n();
  std::map<Variable, FlagRingElement> sigma;
  for (std::size_t i = 1; i <= n; ++i) sigma.emplace(xvar(i), -FlagRingElement::x(n + 1 - i, n));
  return substitute(a.polynomial(), sigma, FlagRingElement::constant(1, n));
}

FlagRingElement kim_convention(const DLResult& r) {
  if (r.query.theory != Theory::CH) {
    throw InvalidQuery("Kim's convention applies to Chow classes (theory ch)");
  }
  return kim_substitute(r.element);
}

Integer flag_count_oracle(std::size_t n, unsigned q) {
  Integer total = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Integer bracket = 0;
    Integer power = 1;
    for (std::size_t k = 0; k < i; ++k) {
      bracket += power;
      power *= q;
    }
    total *= bracket;
  }
  return total;
}

}  // namespace dlk
