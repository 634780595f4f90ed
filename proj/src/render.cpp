#include "dlk/render.hpp"

#include <sstream>

namespace dlk {

namespace {

std::vector<unsigned> exponents_from_json(const Json& j, const char* field) {
  if (!j.is_array()) throw std::invalid_argument(std::string("term field '") + field + "' must be an array");
  std::vector<unsigned> out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0)) {
      throw std::invalid_argument(std::string("exponent in '") + field + "' must be a nonnegative integer");
    }
    out.push_back(e.get<unsigned>());
  }
  return out;
}

Integer integer_from_json(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("coefficient must be a decimal string");
  Integer v;
  if (v.set_str(j.get<std::string>(), 10) != 0) {
    throw std::invalid_argument("bad decimal coefficient '" + j.get<std::string>() + "'");
  }
  return v;
}

unsigned beta_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw std::invalid_argument("beta exponent must be a nonnegative integer");
  }
  return j.get<unsigned>();
}

struct Symbols {
  std::string beta;
  std::string x_prefix, y_prefix, open, close, power_open, power_close, join;
};

const Symbols kLatex{"\\beta", "x_{", "y_{", "", "}", "^{", "}", " "};
const Symbols kPlain{"beta", "x", "y", "", "", "^", "", "*"};

std::string render_monomial(const Monomial& m, const Symbols& s) {
  std::vector<std::string> factors;
  auto power = [&](std::string base, unsigned e) {
    if (e > 1) base += s.power_open + std::to_string(e) + s.power_close;
    factors.push_back(std::move(base));
  };
  if (m.beta) power(s.beta, m.beta);
  for (std::size_t i = 1; i <= m.x.size(); ++i) {
    if (m.x[i - 1]) power(s.x_prefix + std::to_string(i) + s.close, m.x[i - 1]);
  }
  for (std::size_t j = 1; j <= m.y.size(); ++j) {
    if (m.y[j - 1]) power(s.y_prefix + std::to_string(j) + s.close, m.y[j - 1]);
  }
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += s.join;
    out += factors[k];
  }
  return out;
}

std::string render(const BetaPolynomial& p, const Symbols& s) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = render_monomial(m, s);
    if (mono.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += mono;
    } else {
      out += magnitude.get_str() + s.join + mono;
    }
  }
  return out;
}

std::string latex_permutation(const Permutation& w) {
  std::string s;
  for (int v : w.word()) s += std::to_string(v);
  return w.size() < 10 ? s : to_string(w);
}

}  // namespace

Json to_json(const BetaPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    terms.push_back(Json{{"beta", m.beta}, {"x", m.x}, {"y", m.y}, {"coeff", c.get_str()}});
  }
  return terms;
}

BetaPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  BetaPolynomial p;
  for (const auto& t : j) {
    if (!t.is_object()) throw std::invalid_argument("polynomial term must be an object");
    for (const char* key : {"beta", "x", "y", "coeff"}) {
      if (!t.contains(key)) throw std::invalid_argument(std::string("term missing '") + key + "'");
    }
    Monomial m{exponents_from_json(t["x"], "x"), exponents_from_json(t["y"], "y"), beta_from_json(t["beta"])};
    m.normalize();
    p.add_term(m, integer_from_json(t["coeff"]));
  }
  return p;
}

Json to_json(const FlagRingElement& a) {
  return Json{{"n", a.n()}, {"basis", "staircase"}, {"terms", to_json(a.polynomial())}};
}

FlagRingElement flag_element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw std::invalid_argument("flag ring element needs 'n' and 'terms'");
  }
  return FlagRingElement::reduce(polynomial_from_json(j["terms"]), j["n"].get<std::size_t>());
}

Json to_json(const SchubertExpansion& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.coefficients) {
    Json coeff = Json::array();
    for (const auto& [m, v] : c.terms()) coeff.push_back(Json{{"beta", m.beta}, {"value", v.get_str()}});
    terms.push_back(Json{{"w", to_string(w)}, {"coeff", coeff}});
  }
  return Json{{"n", e.n}, {"terms", terms}};
}

SchubertExpansion expansion_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("terms")) {
    throw std::invalid_argument("expansion needs 'n' and 'terms'");
  }
  SchubertExpansion e;
  e.n = j["n"].get<std::size_t>();
  for (const auto& t : j["terms"]) {
    Permutation w = parse_permutation(t.at("w").get<std::string>());
    BetaPolynomial c;
    for (const auto& part : t.at("coeff")) {
      c.add_term(Monomial{{}, {}, beta_from_json(part.at("beta"))}, integer_from_json(part.at("value")));
    }
    if (!c.is_zero()) e.coefficients.emplace(std::move(w), std::move(c));
  }
  return e;
}

Json to_json(const DLResult& r) {
  Json conventions = Json::object();
  for (const auto& [k, v] : r.conventions) conventions[k] = v;
  Json j{{"w", to_string(r.query.w)},
         {"n", r.query.n},
         {"q", r.query.q},
         {"theory", to_string(r.query.theory)},
         {"conventions", conventions},
         {"element", to_json(r.element)},
         {"expansion", to_json(r.expansion)}};
  if (r.beta_value) j["beta"] = *r.beta_value;
  if (!r.warnings.empty()) j["warnings"] = r.warnings;
  return j;
}

std::string to_latex(const BetaPolynomial& p) { return render(p, kLatex); }
std::string to_plain(const BetaPolynomial& p) { return render(p, kPlain); }

std::string expansion_to_plain(const SchubertExpansion& e) {
  std::ostringstream out;
  if (e.coefficients.empty()) out << "0\n";
  for (const auto& [w, c] : e.coefficients) out << to_string(w) << ": " << to_plain(c) << '\n';
  return out.str();
}

std::string expansion_to_latex(const SchubertExpansion& e) {
  if (e.coefficients.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : e.coefficients) {
    if (!first) out += " + ";
    first = false;
    const std::string coeff = to_latex(c);
    const std::string cls = "[\\Omega_{" + latex_permutation(w) + "}]";
    if (coeff == "1") {
      out += cls;
    } else if (c.size() == 1 && c.terms().begin()->second > 0) {
      out += coeff + " " + cls;
    } else {
      out += "(" + coeff + ") " + cls;
    }
  }
  return out;
}

}  // namespace dlk
