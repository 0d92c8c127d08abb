#include "psi0/gamma.hpp"
#include "psi0/render.hpp"
#include "psi0/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

// Exit codes: 0 success, 1 verification failure, 2 usage/validation error.
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::vector<psi0::Int> parse_exponents(const std::string& csv) {
  std::vector<psi0::Int> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = csv.find(',', start);
    const std::string token =
        csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      const psi0::Rational value = psi0::parse_rational(token);
      if (!psi0::is_integer(value)) throw std::invalid_argument("not an integer");
      out.push_back(numerator(value));  // found via ADL on Rational
    } catch (const std::exception&) {
      throw std::invalid_argument("--x: '" + token + "' is not an integer");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int run_gamma(int n, psi0::OutputFormat format, bool ascii) {
  const psi0::SigmaPoly g = psi0::gamma(n);
  switch (format) {
    case psi0::OutputFormat::text:
      std::cout << psi0::render_text(g, ascii) << '\n';
      break;
    case psi0::OutputFormat::latex:
      std::cout << psi0::render_latex(g) << '\n';
      break;
    case psi0::OutputFormat::json:
      std::cout << psi0::render_json(n, g) << '\n';
      break;
  }
  return 0;
}

int run_eval(int n, const std::string& csv) {
  const std::vector<psi0::Int> x = parse_exponents(csv);
  std::cout << psi0::h0(n, x) << '\n';
  return 0;
}

int run_table(int n_max, psi0::OutputFormat format, bool ascii) {
  if (n_max < 3) throw std::invalid_argument("table: --n-max must be at least 3");
  if (format == psi0::OutputFormat::json) {
    std::vector<std::pair<int, psi0::SigmaPoly>> records;
    for (int n = 3; n <= n_max; ++n) records.emplace_back(n, psi0::gamma(n));
    std::cout << psi0::render_json_records(records) << '\n';
    return 0;
  }
  for (int n = 3; n <= n_max; ++n) {
    if (n > 3) std::cout << '\n';
    if (format == psi0::OutputFormat::latex) {
      std::cout << "\\gamma_" << (n < 10 ? "" : "{") << n << (n < 10 ? "" : "}")
                << " = " << psi0::render_latex(psi0::gamma(n)) << '\n';
    } else {
      std::cout << "gamma(" << n << ") = " << psi0::render_text(psi0::gamma(n), ascii)
                << '\n';
    }
  }
  return 0;
}

int run_verify(int n_max, int grid_bound) {
  const psi0::VerificationReport tables = psi0::verify_reference_tables();
  const psi0::VerificationReport oracle = psi0::oracle_cross_check(n_max, grid_bound);

  std::size_t table_checks = 0, table_passed = 0, step_checks = 0, step_passed = 0,
              anchor_checks = 0, anchor_passed = 0;
  for (const psi0::Check& c : tables.checks) {
    auto& total = c.name.rfind("step", 0) == 0     ? step_checks
                  : c.name.rfind("anchor", 0) == 0 ? anchor_checks
                                                   : table_checks;
    auto& passed = c.name.rfind("step", 0) == 0     ? step_passed
                   : c.name.rfind("anchor", 0) == 0 ? anchor_passed
                                                    : table_passed;
    total += 1;
    if (c.passed) passed += 1;
  }
  std::cout << "tables: " << table_passed << "/" << table_checks << " pass\n";
  std::cout << "worked examples: " << step_passed << "/" << step_checks << " pass\n";
  std::cout << "anchors: " << anchor_passed << "/" << anchor_checks << " pass\n";
  if (oracle.all_passed()) {
    std::cout << "oracle: " << oracle.points_checked << " points pass (n = 3.."
              << n_max << ", entries 0.." << grid_bound << ")\n";
  } else {
    std::cout << "oracle: failed (" << oracle.passed_count() << "/"
              << oracle.checks.size() << " grids pass, " << oracle.points_checked
              << " points examined)\n";
  }
  bool ok = tables.all_passed() && oracle.all_passed();
  for (const auto* report : {&tables, &oracle})
    for (const psi0::Check& c : report->checks)
      if (!c.passed) std::cout << "FAIL " << c.name << ": " << c.detail << '\n';
  std::cout << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? 0 : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "psi0 — exact section counts of cotangent-line bundles on the "
      "moduli spaces of stable n-pointed genus-0 curves"};
  app.require_subcommand(1);

  int n = 0;
  int n_max = 8;
  int grid_bound = 2;
  std::string x_csv;
  std::string format_name = "text";
  bool ascii = false;

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"text", "latex", "json"}))
        ->capture_default_str();
    cmd->add_flag("--ascii", ascii, "write s1, s2, ... instead of σ1, σ2, ...");
  };

  CLI::App* cmd_gamma =
      app.add_subcommand("gamma", "print the sigma-basis polynomial for n marked points");
  cmd_gamma->add_option("--n", n, "number of marked points (>= 3)")->required();
  add_format(cmd_gamma);

  CLI::App* cmd_eval =
      app.add_subcommand("eval", "evaluate the section count at an exponent vector");
  cmd_eval->add_option("--n", n, "number of marked points (>= 3)")->required();
  cmd_eval->add_option("--x", x_csv, "comma-separated non-negative exponents, length n")
      ->required();

  CLI::App* cmd_table = app.add_subcommand("table", "print every polynomial up to n-max");
  cmd_table->add_option("--n-max", n_max, "largest n to print")->required();
  add_format(cmd_table);

  CLI::App* cmd_verify = app.add_subcommand(
      "verify", "check computed polynomials against the reference table and the "
                "value-level recursion");
  cmd_verify->add_option("--n-max", n_max, "cross-check every n up to this bound")
      ->capture_default_str();
  cmd_verify->add_option("--grid-bound", grid_bound, "largest exponent entry in the grid")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const auto format = psi0::parse_format(format_name);
    if (cmd_gamma->parsed()) return run_gamma(n, *format, ascii);
    if (cmd_eval->parsed()) return run_eval(n, x_csv);
    if (cmd_table->parsed()) return run_table(n_max, *format, ascii);
    if (cmd_verify->parsed()) return run_verify(n_max, grid_bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
