#include "eisen/cli.hpp"

#include "eisen/hyperbolic.hpp"
#include "eisen/reducer.hpp"
#include "eisen/render.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <regex>
#include <sstream>

namespace eisen::cli {

namespace {

std::string sci(const Real& x) { return x.str(3, std::ios_base::scientific); }

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

struct Comparison {
  Complex oracle;
  Complex symbolic;
  Real abs_diff;
  Real rel_diff;
};

Comparison compare(const Complex& oracle, const Complex& symbolic) {
  Comparison c{oracle, symbolic, abs(oracle - symbolic), 0};
  const Real scale = abs(oracle);
  c.rel_diff = scale > 0 ? Real(c.abs_diff / scale) : c.abs_diff;
  return c;
}

void write_comparison(std::ostream& os, const Comparison& c, const OracleReport& report,
                      double tolerance, bool passed, Format format) {
  if (format == Format::json) {
    nlohmann::ordered_json j;
    j["oracle"] = {{"re", c.oracle.re.str(30)}, {"im", c.oracle.im.str(30)}};
    j["symbolic"] = {{"re", c.symbolic.re.str(30)}, {"im", c.symbolic.im.str(30)}};
    j["abs_diff"] = sci(c.abs_diff);
    j["rel_diff"] = sci(c.rel_diff);
    j["truncation"] = report.truncation;
    j["tail_estimate"] = sci(report.tail_estimate);
    j["summation_order"] = report.summation_order;
    j["tolerance"] = tolerance;
    j["status"] = passed ? "ok" : "mismatch";
    os << j.dump(2) << "\n";
    return;
  }
  os << "oracle:        " << format_complex(c.oracle, 30) << "\n"
     << "symbolic:      " << format_complex(c.symbolic, 30) << "\n"
     << "abs_diff:      " << sci(c.abs_diff) << "\n"
     << "rel_diff:      " << sci(c.rel_diff) << "\n"
     << "truncation:    " << report.truncation << "\n"
     << "tail_estimate: " << sci(report.tail_estimate) << "\n"
     << "order:         " << report.summation_order << "\n"
     << "status:        " << (passed ? "ok" : "MISMATCH") << "\n";
}

void write_ring(std::ostream& os, const FormulaRecord& record, Format format) {
  switch (format) {
    case Format::text: os << render_text(record.value) << "\n"; break;
    case Format::latex: os << render_latex(record.value) << "\n"; break;
    case Format::json: os << render_json(record) << "\n"; break;
  }
}

void write_closed_form(std::ostream& os, const ClosedFormValue& v, int digits, Format format,
                       nlohmann::ordered_json header) {
  const std::string decimal = eval_closed_form(v).str(digits);
  switch (format) {
    case Format::text: os << render_text(v) << "\n" << decimal << "\n"; break;
    case Format::latex: os << render_latex(v) << "\n" << decimal << "\n"; break;
    case Format::json:
      header["terms"] = nlohmann::ordered_json::parse(render_json(v));
      header["decimal"] = decimal;
      os << header.dump(2) << "\n";
      break;
  }
}

}  // namespace

std::vector<int> parse_indices(const std::string& text) {
  static const std::regex entry(R"(\s*([+-]?\d+)\s*)");
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (!std::regex_match(item, m, entry)) throw std::invalid_argument("malformed indices '" + text + "'");
    out.push_back(std::stoi(m[1].str()));
  }
  if (out.empty() || (!text.empty() && text.back() == ','))
    throw std::invalid_argument("malformed indices '" + text + "'");
  return out;
}

Complex parse_tau(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ') text += ch;
  if (text == "rho") {
    const Real third = 2 * pi_value() / 3;
    return {cos(third), sin(third)};
  }
  static const std::string number = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
  static const std::regex real_only("([+-]?" + number + ")");
  static const std::regex imag_only("([+-]?)(" + number + ")?i");
  static const std::regex full("([+-]?" + number + ")([+-])(" + number + ")?i");
  std::smatch m;
  auto sign = [](const std::string& s) { return s == "-" ? Real(-1) : Real(1); };
  if (std::regex_match(text, m, full))
    return {Real(m[1].str()), sign(m[2].str()) * (m[3].matched ? Real(m[3].str()) : Real(1))};
  if (std::regex_match(text, m, imag_only))
    return {Real(0), sign(m[1].str()) * (m[2].matched ? Real(m[2].str()) : Real(1))};
  if (std::regex_match(text, m, real_only)) return {Real(m[1].str()), Real(0)};
  throw std::invalid_argument("malformed complex number '" + raw + "' (expected a+bi)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact reduction and numerical verification of multiple Eisenstein-type series",
               "eisen-cli"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string out_path;
  unsigned precision = kDefaultPrecisionBits;
  app.add_option("--out", out_path, "Write the rendered result to this file instead of stdout");
  app.add_option("--precision", precision, "Working precision in bits")->check(CLI::Range(64u, 4096u));

  const std::vector<std::string> formats{"text", "latex", "json"};
  std::string indices, format = "text", family = "full", at = "i", tau;
  int digits = 30, mmax = kDefaultMmax, nmax = kDefaultNmax, power = 0, p = 0, weight = 0;
  int terms = kDefaultQTerms, max_weight = 12, max_depth = 4;
  double tolerance = 1e-6;
  std::vector<std::string> taus{"0+2i", "0.5+2i"};

  auto* reduce = app.add_subcommand("reduce", "Reduce G~ to Q[pi^2, tau^2, G2, G4, G6]");
  reduce->add_option("--indices", indices, "Even exponents, e.g. 2,4,2")->required();
  reduce->add_option("--format", format)->check(CLI::IsMember(formats));
  reduce->add_option("--family", family)->check(CLI::IsMember({"full", "star"}));

  auto* value = app.add_subcommand("value", "Exact value of G~ at tau = i");
  value->add_option("--indices", indices)->required();
  value->add_option("--at", at, "Specialization point (only i is exact)");
  value->add_option("--format", format)->check(CLI::IsMember(formats));
  value->add_option("--digits", digits)->check(CLI::Range(1, 1000));

  auto* oracle = app.add_subcommand("oracle", "Compare the reduced formula with a lattice-sum oracle");
  oracle->add_option("--indices", indices)->required();
  oracle->add_option("--tau", tau, "Point in the upper half plane, a+bi or rho")->required();
  oracle->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
  oracle->add_option("--family", family)->check(CLI::IsMember({"full", "star"}));
  oracle->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  oracle->add_option("--tolerance", tolerance, "Relative tolerance; exceeding it exits with 3");

  auto* coth_cmd = app.add_subcommand("coth", "Reduce the coth^{2k}-weighted multiple series");
  coth_cmd->add_option("--indices", indices)->required();
  coth_cmd->add_option("--power", power, "Even coth power 2k")->required();
  coth_cmd->add_option("--format", format)->check(CLI::IsMember(formats));
  coth_cmd->add_option("--tau", tau, "Also verify against the brute-force oracle at this point");
  coth_cmd->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
  coth_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
  coth_cmd->add_option("--tolerance", tolerance);

  auto* cauchy = app.add_subcommand("cauchy", "sum_{m != 0} coth(m pi) / m^{4p+3} in closed form");
  cauchy->add_option("--p", p)->required();
  cauchy->add_option("--format", format)->check(CLI::IsMember(formats));
  cauchy->add_option("--digits", digits)->check(CLI::Range(1, 1000));

  auto* eisenstein = app.add_subcommand("eisenstein", "Evaluate G_w(tau) from its q-expansion");
  eisenstein->add_option("--weight", weight)->required();
  eisenstein->add_option("--tau", tau)->required();
  eisenstein->add_option("--terms", terms)->check(CLI::PositiveNumber);
  eisenstein->add_option("--digits", digits)->check(CLI::Range(1, 1000));

  auto* verify = app.add_subcommand("verify", "Sweep reduced formulas against the lattice oracle");
  verify->add_option("--max-weight", max_weight)->check(CLI::Range(2, 40));
  verify->add_option("--max-depth", max_depth)->check(CLI::Range(1, 8));
  verify->add_option("--tau", taus, "Evaluation points");
  verify->add_option("--mmax", mmax)->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", tolerance)->default_val(1e-8);

  std::vector<const char*> argv{"eisen-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  PrecisionScope scope(precision);
  std::ostringstream result;
  int status = kExitOk;
  try {
    const Format fmt = parse_format(format);
    if (*reduce) {
      const auto t = IndexTuple::from_exponents(parse_indices(indices), parse_family(family));
      write_ring(result, {t.family(), t.exponents(), std::nullopt, reduce_multi(t)}, fmt);
    } else if (*value) {
      if (at != "i")
        throw std::domain_error("only tau = i has an exact specialization; use 'oracle' for '" + at + "'");
      const auto t = IndexTuple::from_exponents(parse_indices(indices));
      nlohmann::ordered_json header{{"family", "full"}, {"indices", t.exponents()}, {"at", "i"}};
      write_closed_form(result, specialize_i(reduce_multi(t)), digits, fmt, header);
    } else if (*oracle) {
      const auto t = IndexTuple::from_exponents(parse_indices(indices), parse_family(family));
      const Complex point = parse_tau(tau);
      const auto report = oracle_Gtilde(t, point, mmax);
      const auto cmp = compare(report.value, eval_ring_element(reduce_multi(t), point));
      const bool passed = cmp.rel_diff <= tolerance;
      write_comparison(result, cmp, report, tolerance, passed, fmt);
      if (!passed) status = kExitVerification;
    } else if (*coth_cmd) {
      if (power < 0 || power % 2 != 0)
        throw std::invalid_argument("power must be an even non-negative integer");
      const auto exps = IndexTuple::from_exponents(parse_indices(indices)).halves();
      const CothIndex index(exps, power / 2);
      const RingElement formula = coth_reduce(index);
      write_ring(result, {Family::coth, index.base.exponents(), power, formula}, fmt);
      if (!tau.empty()) {
        const Complex point = parse_tau(tau);
        const auto report = oracle_coth(index, point, mmax, nmax);
        const auto cmp = compare(report.value, eval_ring_element(formula, point));
        const bool passed = cmp.rel_diff <= tolerance;
        write_comparison(result, cmp, report, tolerance, passed, fmt == Format::json ? Format::json : Format::text);
        if (!passed) status = kExitVerification;
      }
    } else if (*cauchy) {
      if (p < 0) throw std::invalid_argument("p must be non-negative");
      write_closed_form(result, cauchy_closed_form(p), digits, fmt, nlohmann::ordered_json{{"p", p}});
    } else if (*eisenstein) {
      if (weight < 2 || weight % 2 != 0) throw std::invalid_argument("weight must be an even integer >= 2");
      const Complex g = eval_G(weight / 2, parse_tau(tau), terms);
      if (fmt == Format::json) {
        nlohmann::ordered_json j{{"weight", weight}, {"tau", tau}, {"re", g.re.str(digits)}, {"im", g.im.str(digits)}};
        result << j.dump(2) << "\n";
      } else {
        result << format_complex(g, digits) << "\n";
      }
    } else if (*verify) {
      int failures = 0, checks = 0;
      for (const auto& tau_text : taus) {
        const Complex point = parse_tau(tau_text);
        for (const auto& t : all_tuples(max_weight, max_depth)) {
          const auto report = oracle_Gtilde(t, point, mmax);
          const auto cmp = compare(report.value, eval_ring_element(reduce_multi(t), point));
          const bool passed = cmp.rel_diff <= tolerance;
          ++checks;
          if (!passed) ++failures;
          result << (passed ? "ok   " : "FAIL ") << "(" << join(t.exponents()) << ") tau=" << tau_text
                 << " rel=" << sci(cmp.rel_diff) << "\n";
        }
      }
      result << checks << " checks, " << failures << " failures\n";
      if (failures > 0) status = kExitVerification;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    file << result.str();
  } else {
    out << result.str();
  }
  return status;
}

}  // namespace eisen::cli
