#pragma once

// Text, LaTeX and JSON renderings of exact results.

#include "eisen/reducer.hpp"
#include "eisen/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eisen {

enum class Format { text, latex, json };

Format parse_format(const std::string& text);

/// "G4 + (2/3)*pi^2*tau^-2*G2 - (2/15)*pi^4*tau^-4"
std::string render_text(const RingElement& x);
/// "G_4(\tau)+\frac{2\pi^2}{3\tau^2}G_2(\tau)-\frac{2\pi^4}{15\tau^4}"
std::string render_latex(const RingElement& x);

/// "(1/15)*varpi^4 - (2/15)*pi^4 + (2/3)*pi^3"
std::string render_text(const ClosedFormValue& v);
/// "\frac{\varpi^4}{15}-\frac{2\pi^4}{15}+\frac{2\pi^3}{3}"
std::string render_latex(const ClosedFormValue& v);

/// A labelled symbolic result as exchanged in JSON form:
///   {"family": ..., "indices": [...], ["power": 2k,] "terms": [{"coeff": "p/q",
///    "pi2": a, "tau2": b, "g2": c, "g4": d, "g6": e}, ...]}
/// Terms appear in canonical order and coefficients are exact strings.
struct FormulaRecord {
  Family family = Family::full;
  std::vector<int> indices;  // literal even exponents
  std::optional<int> power;  // coth power 2k, coth family only
  RingElement value;
};

std::string render_json(const FormulaRecord& record);
/// Inverse of render_json. Throws std::invalid_argument on schema violations.
FormulaRecord parse_formula_json(const std::string& text);

std::string render_json(const ClosedFormValue& v);

}  // namespace eisen
