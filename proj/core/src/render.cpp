#include "psi0/render.hpp"

#include <json.hpp>

#include <sstream>

namespace psi0 {
namespace {

std::string text_monomial(const SigmaMonomial& m, bool ascii) {
  return to_string(m, ascii ? "s" : "σ");
}

std::string latex_monomial(const SigmaMonomial& m) {
  std::ostringstream out;
  for (const auto& [d, e] : m.factors()) {
    out << "\\sigma_";
    if (d < 10)
      out << d;
    else
      out << '{' << d << '}';
    if (e > 1) {
      out << '^';
      if (e < 10)
        out << e;
      else
        out << '{' << e << '}';
    }
  }
  return out.str();
}

std::string latex_coefficient(const Rational& abs_value) {
  if (denominator(abs_value) == 1) return numerator(abs_value).str();
  return "\\frac{" + numerator(abs_value).str() + "}{" +
         denominator(abs_value).str() + "}";
}

nlohmann::ordered_json json_record(int n, const SigmaPoly& p) {
  nlohmann::ordered_json record;
  record["n"] = n;
  if (const auto d = p.degree())
    record["degree"] = *d;
  else
    record["degree"] = nullptr;
  auto& terms = record["terms"] = nlohmann::ordered_json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::ordered_json term;
    auto& sigma = term["sigma"] = nlohmann::ordered_json::object();
    for (const auto& [d, e] : m.factors()) sigma[std::to_string(d)] = e;
    term["coeff"] = to_fraction_string(c);
    terms.push_back(std::move(term));
  }
  return record;
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "latex") return OutputFormat::latex;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

std::string render_text(const SigmaPoly& p, bool ascii) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      out << to_display_string(magnitude);
    } else {
      if (magnitude != 1) out << to_display_string(magnitude) << ' ';
      out << text_monomial(m, ascii);
    }
  }
  return out.str();
}

std::string render_latex(const SigmaPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      out << latex_coefficient(magnitude);
    } else {
      if (magnitude != 1) out << latex_coefficient(magnitude);
      out << latex_monomial(m);
    }
  }
  return out.str();
}

std::string render_json(int n, const SigmaPoly& p) { return json_record(n, p).dump(2); }

std::string render_json_records(const std::vector<std::pair<int, SigmaPoly>>& records) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& [n, p] : records) array.push_back(json_record(n, p));
  return array.dump(2);
}

}  // namespace psi0
