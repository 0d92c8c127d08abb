#include "psi0/basis.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace psi0 {
namespace {

// All 0/1 exponent vectors with d ones among m slots (the monomials of
// sigma_d), enumerated in lexicographic index order.
std::vector<Exponents> unit_subsets(int d, int m) {
  std::vector<Exponents> out;
  if (d > m) return out;
  if (d == 0) {
    out.emplace_back(m, 0);
    return out;
  }
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  while (true) {
    Exponents v(m, 0);
    for (int i : idx) v[i] = 1;
    out.push_back(std::move(v));
    int i = d - 1;
    while (i >= 0 && idx[i] == m - d + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// A symmetric polynomial stored orbit-compressed: the key is the sorted
// non-increasing exponent vector and the value is the coefficient the full
// expansion carries on every monomial of that orbit. Keys are ordered
// lex-descending so begin() is the lex-leading monomial of the full
// polynomial (for a symmetric polynomial the lex-leading exponent vector is
// non-increasing).
template <typename Coeff>
using Compressed = std::map<Exponents, Coeff, std::greater<Exponents>>;

Exponents sorted_desc(Exponents e) {
  std::sort(e.begin(), e.end(), std::greater<int>());
  return e;
}

// Multiply an orbit-compressed symmetric polynomial by sigma_d. For each
// candidate product representative nu, the full-expansion coefficient is
// sum over the 0/1 vectors v of weight d with nu - v >= 0 of p[sort(nu - v)].
Compressed<Int> compressed_times_sigma(const Compressed<Int>& p, int d, int m) {
  const std::vector<Exponents> masks = unit_subsets(d, m);
  std::set<Exponents, std::greater<Exponents>> support;
  Exponents scratch(m);
  for (const auto& [rep, c] : p) {
    for (const auto& v : masks) {
      for (int i = 0; i < m; ++i) scratch[i] = rep[i] + v[i];
      support.insert(sorted_desc(scratch));
    }
  }
  Compressed<Int> out;
  for (const auto& nu : support) {
    Int acc = 0;
    for (const auto& v : masks) {
      bool feasible = true;
      for (int i = 0; i < m; ++i) {
        scratch[i] = nu[i] - v[i];
        if (scratch[i] < 0) {
          feasible = false;
          break;
        }
      }
      if (!feasible) continue;
      const auto it = p.find(sorted_desc(scratch));
      if (it != p.end()) acc += it->second;
    }
    if (acc != 0) out.emplace(nu, std::move(acc));
  }
  return out;
}

using ExpansionMemo = std::map<SigmaMonomial, Compressed<Int>, SigmaMonomial::CanonicalLess>;

// Orbit-compressed expansion of a sigma monomial in m variables, built by
// peeling one factor at a time. Requires max_index() <= m.
const Compressed<Int>& expand_compressed(const SigmaMonomial& mu, int m,
                                         ExpansionMemo& memo) {
  const auto hit = memo.find(mu);
  if (hit != memo.end()) return hit->second;
  Compressed<Int> result;
  if (mu.is_one()) {
    result.emplace(Exponents(m, 0), Int(1));
  } else {
    const auto [d, e] = mu.factors().back();
    SigmaMonomial parent;
    for (const auto& [pd, pe] : mu.factors()) {
      const int keep = pd == d ? pe - 1 : pe;
      if (keep > 0) parent *= SigmaMonomial::sigma(pd, keep);
    }
    result = compressed_times_sigma(expand_compressed(parent, m, memo), d, m);
  }
  return memo.emplace(mu, std::move(result)).first->second;
}

// sigma_1^{a1-a2} sigma_2^{a2-a3} ... sigma_m^{am}: the unique sigma monomial
// whose expansion has lex-leading monomial x^a (coefficient 1), for a sorted
// non-increasing.
SigmaMonomial leading_sigma_monomial(const Exponents& a) {
  SigmaMonomial mu;
  const int m = static_cast<int>(a.size());
  for (int i = 0; i < m; ++i) {
    const int e = a[i] - (i + 1 < m ? a[i + 1] : 0);
    if (e > 0) mu *= SigmaMonomial::sigma(i + 1, e);
  }
  return mu;
}

}  // namespace

XPoly expand_sigma(int d, int var_count) {
  if (d < 1) throw std::invalid_argument("expand_sigma: d must be >= 1");
  if (var_count < 1) throw std::invalid_argument("expand_sigma: var_count must be >= 1");
  XPoly out(var_count);
  for (const auto& e : unit_subsets(d, var_count)) out.add_term(e, 1);
  return out;
}

bool is_symmetric(const XPoly& p) {
  const int m = p.var_count();
  Exponents swapped;
  for (const auto& [e, c] : p.terms()) {
    for (int i = 0; i + 1 < m; ++i) {
      if (e[i] == e[i + 1]) continue;
      swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      if (p.coeff(swapped) != c) return false;
    }
  }
  return true;
}

XPoly to_x_basis(const SigmaPoly& f, int var_count) {
  if (var_count < 1) throw std::invalid_argument("to_x_basis: var_count must be >= 1");
  XPoly out(var_count);
  ExpansionMemo memo;
  for (const auto& [mu, c] : f.terms()) {
    if (mu.max_index() > var_count) continue;  // sigma_d == 0 for d > var_count
    for (const auto& [rep, q] : expand_compressed(mu, var_count, memo)) {
      const Rational coeff = c * Rational(q);
      Exponents perm = rep;
      std::sort(perm.begin(), perm.end());
      do {
        out.add_term(perm, coeff);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

SigmaPoly to_sigma_basis(const XPoly& g) {
  if (g.is_zero()) return {};
  const int m = g.var_count();
  if (!is_symmetric(g))
    throw std::invalid_argument("to_sigma_basis: polynomial is not symmetric");
  if (*g.degree() > m)
    throw std::invalid_argument(
        "to_sigma_basis: degree exceeds the variable count, the sigma "
        "representation is not unique");

  // Keep only the sorted representative of each orbit; by symmetry that
  // loses nothing, and it shrinks the reduction state by the orbit sizes.
  Compressed<Rational> work;
  for (const auto& [e, c] : g.terms()) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<int>())) work.emplace(e, c);
  }

  SigmaPoly out;
  ExpansionMemo memo;
  while (!work.empty()) {
    const Exponents lead = work.begin()->first;
    const Rational c = work.begin()->second;
    const SigmaMonomial mu = leading_sigma_monomial(lead);
    out.add_term(mu, c);
    // Every other representative in the expansion is lex-smaller than the
    // leading one, so the loop strictly descends and terminates.
    for (const auto& [rep, q] : expand_compressed(mu, m, memo)) {
      const auto [it, inserted] = work.emplace(rep, -c * Rational(q));
      if (!inserted) {
        it->second -= c * Rational(q);
        if (it->second == 0) work.erase(it);
      }
    }
  }
  return out;
}

Rational evaluate(const SigmaPoly& f, const std::vector<Int>& x) {
  if (x.empty()) throw std::invalid_argument("evaluate: point must be non-empty");
  const int n = static_cast<int>(x.size());
  int top = 0;
  for (const auto& [m, c] : f.terms()) top = std::max(top, m.max_index());

  // sigma_d(x) for d = 0..min(top, n) by the product DP
  // prod_i (1 + x_i t) = sum_d sigma_d t^d.
  const int cap = std::min(top, n);
  std::vector<Int> sigma(cap + 1, 0);
  sigma[0] = 1;
  for (int i = 0; i < n; ++i) {
    for (int d = std::min(cap, i + 1); d >= 1; --d) sigma[d] += x[i] * sigma[d - 1];
  }

  Rational acc = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m.max_index() > n) continue;  // a sigma_d factor vanishes
    Int value = 1;
    for (const auto& [d, e] : m.factors())
      value *= boost::multiprecision::pow(sigma[d], static_cast<unsigned>(e));
    acc += c * Rational(value);
  }
  return acc;
}

}  // namespace psi0
