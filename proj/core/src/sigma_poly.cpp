#include "psi0/sigma_poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace psi0 {

SigmaMonomial SigmaMonomial::sigma(int index, int exponent) {
  if (index < 1) throw std::invalid_argument("SigmaMonomial: index must be >= 1");
  if (exponent < 1) throw std::invalid_argument("SigmaMonomial: exponent must be >= 1");
  SigmaMonomial m;
  m.factors_.emplace_back(index, exponent);
  return m;
}

int SigmaMonomial::weight() const {
  int w = 0;
  for (const auto& [d, e] : factors_) w += d * e;
  return w;
}

int SigmaMonomial::max_index() const {
  return factors_.empty() ? 0 : factors_.back().first;
}

int SigmaMonomial::exponent_of(int index) const {
  for (const auto& [d, e] : factors_)
    if (d == index) return e;
  return 0;
}

SigmaMonomial& SigmaMonomial::operator*=(const SigmaMonomial& rhs) {
  std::vector<std::pair<int, int>> merged;
  merged.reserve(factors_.size() + rhs.factors_.size());
  auto a = factors_.begin();
  auto b = rhs.factors_.begin();
  while (a != factors_.end() || b != rhs.factors_.end()) {
    if (b == rhs.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  factors_ = std::move(merged);
  return *this;
}

bool SigmaMonomial::canonical_less(const SigmaMonomial& a, const SigmaMonomial& b) {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  // same weight: descending lex on (e_1, e_2, ...)
  const int top = std::max(a.max_index(), b.max_index());
  for (int d = 1; d <= top; ++d) {
    const int ea = a.exponent_of(d);
    const int eb = b.exponent_of(d);
    if (ea != eb) return ea > eb;
  }
  return false;
}

std::string to_string(const SigmaMonomial& m, std::string_view prefix) {
  if (m.is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, e] : m.factors()) {
    if (!first) out << ' ';
    first = false;
    out << prefix << d;
    if (e > 1) out << '^' << e;
  }
  return out.str();
}

SigmaMonomial parse_sigma_monomial(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("parse_sigma_monomial: malformed monomial '" +
                                 std::string(text) + "'");
  };
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || p != s.data() + s.size()) throw bad();
    return value;
  };

  SigmaMonomial m;
  std::istringstream in{std::string(text)};
  std::string token;
  bool any = false;
  while (in >> token) {
    any = true;
    if (token == "1" && m.is_one()) continue;  // the empty monomial
    if (token.size() < 2 || token[0] != 's') throw bad();
    std::string_view rest = std::string_view(token).substr(1);
    const auto caret = rest.find('^');
    const int d = parse_int(rest.substr(0, caret));
    const int e = caret == std::string_view::npos ? 1 : parse_int(rest.substr(caret + 1));
    if (d < 1 || e < 1) throw bad();
    m *= SigmaMonomial::sigma(d, e);
  }
  if (!any) throw bad();
  return m;
}

SigmaPoly SigmaPoly::constant(const Rational& value) {
  SigmaPoly p;
  p.add_term(SigmaMonomial::one(), value);
  return p;
}

SigmaPoly SigmaPoly::sigma(int index) {
  SigmaPoly p;
  p.add_term(SigmaMonomial::sigma(index), 1);
  return p;
}

std::optional<int> SigmaPoly::degree() const {
  std::optional<int> d;
  for (const auto& [m, c] : terms_) d = std::max(d.value_or(0), m.weight());
  return d;
}

Rational SigmaPoly::coeff(const SigmaMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SigmaPoly::add_term(const SigmaMonomial& m, const Rational& c) {
  if (c == 0) return;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

SigmaPoly& SigmaPoly::operator-=(const SigmaPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

SigmaPoly& SigmaPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

SigmaPoly SigmaPoly::operator-() const {
  SigmaPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

SigmaPoly operator*(const SigmaPoly& lhs, const SigmaPoly& rhs) {
  SigmaPoly out;
  for (const auto& [ma, ca] : lhs.terms_)
    for (const auto& [mb, cb] : rhs.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

}  // namespace psi0
