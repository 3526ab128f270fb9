#include "catkit/form.hpp"

#include <vector>

namespace catkit {

Form convert_basis(int n, int d, const IndexMap<Rational>& coeffs, Basis from) {
  Form out(n, d);
  for (const auto& [u, c] : coeffs) {
    out.add(u, from == Basis::divided ? c : Rational(c * u.factorial_product()));
  }
  return out;
}

IndexMap<Rational> monomial_coefficients(const Form& f) {
  IndexMap<Rational> out;
  for (const auto& [u, a] : f.coefficients()) {
    Rational c = a / u.factorial_product();
    out.emplace(u, c);
  }
  return out;
}

Form contract(const RPoly& phi, const Form& f) {
  if (phi.n() != f.n()) throw DomainError("contract: variable count mismatch");
  if (phi.degree() > f.degree()) throw DomainError("contract: operator degree exceeds form degree");
  Form out(f.n(), f.degree() - phi.degree());
  for (const auto& [v, c] : phi.coefficients()) {
    for (const auto& [w, a] : f.coefficients()) {
      if (w.dominates(v)) out.add(w - v, c * a);
    }
  }
  return out;
}

IndexMap<Rational> multiply_monomial(const IndexMap<Rational>& a, const IndexMap<Rational>& b) {
  IndexMap<Rational> out;
  for (const auto& [u, x] : a) {
    for (const auto& [v, y] : b) {
      auto [it, inserted] = out.try_emplace(u + v, x * y);
      if (!inserted) it->second += x * y;
    }
  }
  std::erase_if(out, [](const auto& entry) { return sgn(entry.second) == 0; });
  return out;
}

RPoly multiply_r(const RPoly& phi, const RPoly& psi) {
  if (phi.n() != psi.n()) throw DomainError("multiply_r: variable count mismatch");
  return RPoly(phi.n(), phi.degree() + psi.degree(),
               multiply_monomial(phi.coefficients(), psi.coefficients()));
}

Form multiply_s(const Form& f, const Form& g) {
  if (f.n() != g.n()) throw DomainError("multiply_s: variable count mismatch");
  return convert_basis(f.n(), f.degree() + g.degree(),
                       multiply_monomial(monomial_coefficients(f), monomial_coefficients(g)),
                       Basis::monomial);
}

Form substitute(const Form& f, const ExactMatrix& m) {
  if (static_cast<int>(m.rows()) != f.n()) {
    throw DomainError("substitute: matrix must have one row per variable of the form");
  }
  const int new_n = static_cast<int>(m.cols());
  if (new_n < 1) throw DomainError("substitute: matrix has no columns");
  const int d = f.degree();

  // powers[i][k] = (sum_j m(i,j) x'_j)^k in monomial coordinates.
  std::vector<std::vector<IndexMap<Rational>>> powers(f.n());
  const auto units = enumerate_monomials(new_n, 1);
  for (int i = 0; i < f.n(); ++i) {
    IndexMap<Rational> linear;
    for (int j = 0; j < new_n; ++j) {
      if (sgn(m(i, j)) != 0) linear.emplace(units[j], m(i, j));
    }
    auto& row = powers[i];
    row.push_back(IndexMap<Rational>{{MultiIndex(std::vector<int>(new_n, 0)), Rational(1)}});
    for (int k = 1; k <= d; ++k) row.push_back(multiply_monomial(row.back(), linear));
  }

  IndexMap<Rational> result;
  for (const auto& [u, c] : monomial_coefficients(f)) {
    IndexMap<Rational> term{{MultiIndex(std::vector<int>(new_n, 0)), c}};
    for (int i = 0; i < f.n() && !term.empty(); ++i) {
      if (u[i] > 0) term = multiply_monomial(term, powers[i][u[i]]);
    }
    for (const auto& [v, x] : term) {
      auto [it, inserted] = result.try_emplace(v, x);
      if (!inserted) it->second += x;
    }
  }
  return convert_basis(new_n, d, result, Basis::monomial);
}

Form linear_power(const Vector& linear, int d) {
  if (linear.empty()) throw DomainError("linear_power: empty linear form");
  const int n = static_cast<int>(linear.size());
  const Integer dfact = factorial(static_cast<unsigned long>(d));
  Form out(n, d);
  for (const auto& w : enumerate_monomials(n, d)) {
    Rational a = dfact;
    for (int k = 0; k < n && sgn(a) != 0; ++k) {
      for (int e = 0; e < w[k]; ++e) a *= linear[k];
    }
    out.add(w, a);
  }
  return out;
}

std::string format_polynomial(const IndexMap<Rational>& monomial_coeffs, char var) {
  if (monomial_coeffs.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [u, c] : monomial_coeffs) {
    const bool negative = sgn(c) < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (u[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var + std::to_string(k + 1);
      if (u[k] > 1) mono += "^" + std::to_string(u[k]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace catkit
