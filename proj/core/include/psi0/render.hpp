#pragma once

#include "psi0/sigma_poly.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace psi0 {

enum class OutputFormat { text, latex, json };

std::optional<OutputFormat> parse_format(std::string_view name);

/// "1 + 3/2 σ1 + 1/2 σ1^2 + σ2" in canonical term order; ascii swaps σ for s.
/// The zero polynomial renders as "0".
std::string render_text(const SigmaPoly& p, bool ascii = false);

/// "1 + \frac{3}{2}\sigma_1 + \frac{1}{2}\sigma_1^2 + \sigma_2"
std::string render_latex(const SigmaPoly& p);

/// One machine-readable record, pretty-printed with 2-space indent:
///   {"n": <int>, "degree": <int>, "terms": [{"sigma": {"<d>": <exp>, ...},
///    "coeff": "<num>/<den>"}, ...]}
/// Terms appear in canonical order, coefficients as exact fraction strings.
/// Output is byte-deterministic and survives a parse/re-serialize round trip.
std::string render_json(int n, const SigmaPoly& p);

/// JSON array of records in the given order.
std::string render_json_records(const std::vector<std::pair<int, SigmaPoly>>& records);

}  // namespace psi0
