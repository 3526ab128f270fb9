#pragma once

#include <string>

#include "catkit/form.hpp"
#include "catkit/matrix.hpp"
#include "catkit/sampling.hpp"
#include "oracles.hpp"

namespace testing {

using namespace catkit;

// Monomial-basis view of a form, computed with the oracle factorials.
inline oracle::Poly to_poly(const Form& f) {
  oracle::Poly out;
  for (const auto& [u, c] : f.coefficients()) {
    Integer denom = 1;
    for (int e : u.exponents()) denom *= oracle::fact(e);
    out[u.exponents()] = c / Rational(denom);
  }
  return out;
}

inline Form from_poly(int n, int d, const oracle::Poly& p) {
  Form out(n, d);
  for (const auto& [e, c] : p) {
    Integer scale = 1;
    for (int x : e) scale *= oracle::fact(x);
    out.add(MultiIndex(e), c * Rational(scale));
  }
  return out;
}

inline oracle::Poly to_poly(const RPoly& p) {
  oracle::Poly out;
  for (const auto& [u, c] : p.coefficients()) out[u.exponents()] = c;
  return out;
}

inline oracle::Dense dense(const ExactMatrix& m) {
  oracle::Dense out(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline ExactMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, int bound) {
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = Rational(rng.uniform(-bound, bound)) / rng.uniform(1, 3);
  return m;
}

// Form from monomial-basis terms, e.g. mono(2, 3, {{{3,0},1},{{0,3},1}}).
inline Form mono(int n, int d, const std::vector<std::pair<std::vector<int>, int>>& terms) {
  IndexMap<Rational> coeffs;
  for (const auto& [e, c] : terms) coeffs[MultiIndex(e)] += c;
  return convert_basis(n, d, coeffs, Basis::monomial);
}

inline RPoly rpoly(int n, int j, const std::vector<std::pair<std::vector<int>, int>>& terms) {
  RPoly out(n, j);
  for (const auto& [e, c] : terms) out.add(MultiIndex(e), c);
  return out;
}

}  // namespace testing
