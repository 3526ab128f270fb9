// Independent reference implementations used only by the tests. They share
// no code with the library beyond the Rational type.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "catkit/rational.hpp"

namespace oracle {

using catkit::Integer;
using catkit::Rational;
using Dense = std::vector<std::vector<Rational>>;
using Exps = std::vector<int>;
// Plain monomial-basis polynomial: exponent vector -> coefficient.
using Poly = std::map<Exps, Rational>;

inline Rational leibniz_det(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t r = 0; r < n; ++r) term *= m[r][perm[r]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Textbook Gaussian elimination with partial pivoting on the first nonzero.
inline std::size_t gauss_rank(Dense m) {
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || sgn(m[r][c]) == 0) continue;
      const Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// All exponent vectors of length n summing to j, sorted by the rule
// "larger first exponent first, ties broken on the rest".
inline std::vector<Exps> brute_monomials(int n, int j) {
  std::vector<Exps> out;
  Exps e(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      if (std::accumulate(e.begin(), e.end(), 0) == j) out.push_back(e);
      return;
    }
    for (int v = 0; v <= j; ++v) {
      e[static_cast<std::size_t>(k)] = v;
      rec(k + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e(ea.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out[e] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

inline Poly partial(const Poly& p, std::size_t var) {
  Poly out;
  for (const auto& [e, c] : p) {
    if (e[var] == 0) continue;
    Exps f = e;
    f[var] -= 1;
    out[f] += c * e[var];
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

// phi(d/dx_1, ..., d/dx_n) applied to f, both in monomial coordinates.
inline Poly differentiate(const Poly& phi, const Poly& f) {
  Poly out;
  for (const auto& [e, c] : phi) {
    Poly g = f;
    for (std::size_t var = 0; var < e.size(); ++var)
      for (int k = 0; k < e[var]; ++k) g = partial(g, var);
    for (const auto& [eg, cg] : g) out[eg] += c * cg;
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

inline Rational evaluate(const Poly& p, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [e, c] : p) {
    Rational term = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int t = 0; t < e[k]; ++t) term *= x[k];
    total += term;
  }
  return total;
}

inline Integer fact(int k) {
  Integer out = 1;
  for (int t = 2; t <= k; ++t) out *= t;
  return out;
}

inline Integer choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

// (c_1 x_1 + ... + c_n x_n)^d by repeated multiplication.
inline Poly power_of_linear(const std::vector<Rational>& c, int d) {
  Poly lin;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (sgn(c[k]) == 0) continue;
    Exps e(c.size(), 0);
    e[k] = 1;
    lin[e] = c[k];
  }
  Poly out{{Exps(c.size(), 0), Rational(1)}};
  for (int t = 0; t < d; ++t) out = multiply(out, lin);
  return out;
}

}  // namespace oracle
