#include "psi0/reference.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace psi0 {
namespace {

constexpr const char* kReferenceText =
#include "gamma_reference.inc"
    ;

struct ReferenceData {
  std::map<int, SigmaPoly> gammas;
  std::map<std::string, SigmaPoly> steps;
};

ReferenceData parse_reference() {
  ReferenceData data;
  std::istringstream in(kReferenceText);
  std::string line;
  SigmaPoly* current = nullptr;
  int line_no = 0;
  const auto fail = [&](const std::string& why) {
    return std::runtime_error("gamma_reference.inc:" + std::to_string(line_no) +
                              ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "gamma") {
      int n = 0;
      if (!(fields >> n)) throw fail("missing n after 'gamma'");
      current = &data.gammas[n];
      continue;
    }
    if (head == "step") {
      std::string tag;
      if (!(fields >> tag)) throw fail("missing tag after 'step'");
      current = &data.steps[tag];
      continue;
    }
    if (current == nullptr) throw fail("term line before any record header");

    const auto eq = line.find('=');
    if (eq == std::string::npos) throw fail("term line without '='");
    current->add_term(parse_sigma_monomial(line.substr(0, eq)),
                      parse_rational(line.substr(eq + 1)));
  }
  return data;
}

const ReferenceData& reference() {
  static const ReferenceData data = parse_reference();
  return data;
}

}  // namespace

const SigmaPoly& reference_gamma(int n) {
  const auto& gammas = reference().gammas;
  const auto it = gammas.find(n);
  if (it == gammas.end())
    throw std::out_of_range("reference_gamma: no reference record for n = " +
                            std::to_string(n));
  return it->second;
}

int reference_gamma_max() { return reference().gammas.rbegin()->first; }

const SigmaPoly& reference_step_of_one() { return reference().steps.at("one"); }

const SigmaPoly& reference_step_of_sigma1() { return reference().steps.at("sigma1"); }

}  // namespace psi0
