#include "eisen/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace eisen {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& text) {
  if (text == "text") return Format::text;
  if (text == "latex") return Format::latex;
  if (text == "json") return Format::json;
  throw std::invalid_argument("unknown format '" + text + "'");
}

namespace {

std::string text_power(const std::string& symbol, int power) {
  return power == 1 ? symbol : symbol + "^" + std::to_string(power);
}

std::string latex_power(const std::string& symbol, int power) {
  if (power == 1) return symbol;
  const std::string p = std::to_string(power);
  return symbol + "^" + (p.size() == 1 ? p : "{" + p + "}");
}

// Joins signed terms: leading '-' only, then " + " / " - " (text) or "+"/"-".
template <typename Terms, typename RenderMagnitude>
std::string join_terms(const Terms& terms, bool spaced, RenderMagnitude render) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, q] : terms) {
    const bool negative = q < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+");
    }
    out += render(key, Rational(abs(q)));
    first = false;
  }
  return out;
}

std::string text_term(const Rational& magnitude, const std::vector<std::string>& factors) {
  if (factors.empty()) return magnitude.get_str();
  std::string f;
  for (std::size_t i = 0; i < factors.size(); ++i) f += (i ? "*" : "") + factors[i];
  if (magnitude == 1) return f;
  if (magnitude.get_den() == 1) return magnitude.get_str() + "*" + f;
  return "(" + magnitude.get_str() + ")*" + f;
}

// \frac{num_scalar num_symbols}{den_scalar den_symbols} followed by `trailer`.
std::string latex_term(const Rational& magnitude, const std::string& num_symbols,
                       const std::string& den_symbols, const std::string& trailer) {
  const std::string num_scalar = magnitude.get_num().get_str();
  const std::string den_scalar = magnitude.get_den() == 1 ? "" : magnitude.get_den().get_str();
  std::string num = (magnitude.get_num() == 1 && !num_symbols.empty()) ? "" : num_scalar;
  num += num_symbols;
  const std::string den = den_scalar + den_symbols;
  if (!den.empty()) return "\\frac{" + num + "}{" + den + "}" + trailer;
  if (num == "1" && !trailer.empty()) return trailer;
  return num + trailer;
}

}  // namespace

std::string render_text(const RingElement& x) {
  return join_terms(x.terms(), true, [](const Monomial& m, const Rational& q) {
    std::vector<std::string> f;
    if (m.a != 0) f.push_back(text_power("pi", 2 * m.a));
    if (m.b != 0) f.push_back(text_power("tau", 2 * m.b));
    if (m.c != 0) f.push_back(text_power("G2", m.c));
    if (m.d != 0) f.push_back(text_power("G4", m.d));
    if (m.e != 0) f.push_back(text_power("G6", m.e));
    return text_term(q, f);
  });
}

std::string render_latex(const RingElement& x) {
  return join_terms(x.terms(), false, [](const Monomial& m, const Rational& q) {
    std::string num, den, g;
    if (m.a > 0) num += latex_power("\\pi", 2 * m.a);
    if (m.b > 0) num += latex_power("\\tau", 2 * m.b);
    if (m.b < 0) den += latex_power("\\tau", -2 * m.b);
    if (m.a < 0) den += latex_power("\\pi", -2 * m.a);
    if (m.e != 0) g += latex_power("G_6(\\tau)", m.e);
    if (m.d != 0) g += latex_power("G_4(\\tau)", m.d);
    if (m.c != 0) g += latex_power("G_2(\\tau)", m.c);
    return latex_term(q, num, den, g);
  });
}

std::string render_text(const ClosedFormValue& v) {
  return join_terms(v.terms(), true, [](const ClosedFormValue::Key& k, const Rational& q) {
    std::vector<std::string> f;
    if (k.varpi_power != 0) f.push_back(text_power("varpi", k.varpi_power));
    if (k.pi_power != 0) f.push_back(text_power("pi", k.pi_power));
    return text_term(q, f);
  });
}

std::string render_latex(const ClosedFormValue& v) {
  return join_terms(v.terms(), false, [](const ClosedFormValue::Key& k, const Rational& q) {
    std::string num, den;
    if (k.varpi_power > 0) num += latex_power("\\varpi", k.varpi_power);
    if (k.pi_power > 0) num += latex_power("\\pi", k.pi_power);
    if (k.pi_power < 0) den += latex_power("\\pi", -k.pi_power);
    return latex_term(q, num, den, "");
  });
}

std::string render_json(const FormulaRecord& record) {
  ordered_json j;
  j["family"] = to_string(record.family);
  j["indices"] = record.indices;
  if (record.power) j["power"] = *record.power;
  j["terms"] = ordered_json::array();
  for (const auto& [m, q] : record.value.terms()) {
    j["terms"].push_back(ordered_json{{"coeff", q.get_str()}, {"pi2", m.a}, {"tau2", m.b},
                                      {"g2", m.c}, {"g4", m.d}, {"g6", m.e}});
  }
  return j.dump(2);
}

FormulaRecord parse_formula_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    FormulaRecord r;
    r.family = parse_family(j.at("family").get<std::string>());
    r.indices = j.at("indices").get<std::vector<int>>();
    if (j.contains("power")) r.power = j.at("power").get<int>();
    for (const auto& t : j.at("terms")) {
      const Monomial m{t.at("pi2").get<int>(), t.at("tau2").get<int>(), t.at("g2").get<int>(),
                       t.at("g4").get<int>(), t.at("g6").get<int>()};
      r.value.add_term(m, parse_rational(t.at("coeff").get<std::string>()));
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed formula JSON: ") + e.what());
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(std::string("malformed formula JSON: ") + e.what());
  }
}

std::string render_json(const ClosedFormValue& v) {
  ordered_json j = ordered_json::array();
  for (const auto& [k, q] : v.terms())
    j.push_back(ordered_json{{"coeff", q.get_str()}, {"pi", k.pi_power}, {"varpi", k.varpi_power}});
  return j.dump(2);
}

}  // namespace eisen
