#pragma once

#include <string>
#include <utility>

#include "catkit/error.hpp"
#include "catkit/matrix.hpp"
#include "catkit/monomial.hpp"
#include "catkit/rational.hpp"

namespace catkit {

struct DividedPowerBasis {};
struct MonomialBasis {};

/// A homogeneous polynomial of degree `degree` in n variables, stored sparsely
/// (zero coefficients are never kept). The tag fixes what the coefficients
/// mean: divided-power coordinates a_W of f = sum a_W x^W / W! for Form,
/// plain monomial coordinates for RPoly.
template <class Basis>
class Homogeneous {
 public:
  Homogeneous(int n, int degree) : n_(n), degree_(degree) {
    if (n < 1 || degree < 0) throw DomainError("homogeneous polynomial needs n >= 1, degree >= 0");
  }

  Homogeneous(int n, int degree, const IndexMap<Rational>& coeffs) : Homogeneous(n, degree) {
    for (const auto& [u, c] : coeffs) add(u, c);
  }

  int n() const { return n_; }
  int degree() const { return degree_; }
  const IndexMap<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Rational coefficient(const MultiIndex& u) const {
    const auto it = coeffs_.find(u);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  void add(const MultiIndex& u, const Rational& c) {
    check_index(u);
    if (sgn(c) == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(u, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) coeffs_.erase(it);
    }
  }

  void set(const MultiIndex& u, const Rational& c) {
    check_index(u);
    if (sgn(c) == 0) {
      coeffs_.erase(u);
    } else {
      coeffs_[u] = c;
    }
  }

  /// Coefficients listed along enumerate_monomials(n, degree).
  Vector to_vector() const {
    const auto order = enumerate_monomials(n_, degree_);
    Vector out;
    out.reserve(order.size());
    for (const auto& u : order) out.push_back(coefficient(u));
    return out;
  }

  static Homogeneous from_vector(int n, int degree, const Vector& values) {
    Homogeneous out(n, degree);
    const auto order = enumerate_monomials(n, degree);
    if (order.size() != values.size()) throw DomainError("coefficient vector length mismatch");
    for (std::size_t k = 0; k < order.size(); ++k) out.add(order[k], values[k]);
    return out;
  }

  Homogeneous& operator+=(const Homogeneous& other) {
    check_shape(other);
    for (const auto& [u, c] : other.coeffs_) add(u, c);
    return *this;
  }
  Homogeneous& operator-=(const Homogeneous& other) {
    check_shape(other);
    for (const auto& [u, c] : other.coeffs_) add(u, -c);
    return *this;
  }
  Homogeneous& operator*=(const Rational& s) {
    if (sgn(s) == 0) {
      coeffs_.clear();
    } else {
      for (auto& entry : coeffs_) entry.second *= s;
    }
    return *this;
  }

  friend Homogeneous operator+(Homogeneous a, const Homogeneous& b) { return a += b; }
  friend Homogeneous operator-(Homogeneous a, const Homogeneous& b) { return a -= b; }
  friend Homogeneous operator*(const Rational& s, Homogeneous a) { return a *= s; }
  friend bool operator==(const Homogeneous&, const Homogeneous&) = default;

 private:
  void check_index(const MultiIndex& u) const {
    if (static_cast<int>(u.size()) != n_ || u.degree() != degree_) {
      throw DomainError("multi-index " + u.str() + " does not fit n=" + std::to_string(n_) +
                        ", degree=" + std::to_string(degree_));
    }
  }
  void check_shape(const Homogeneous& other) const {
    if (other.n_ != n_ || other.degree_ != degree_) throw DomainError("polynomial shape mismatch");
  }

  int n_;
  int degree_;
  IndexMap<Rational> coeffs_;
};

/// Element of S_d = k[x_1..x_n]_d in divided-power coordinates a_W.
using Form = Homogeneous<DividedPowerBasis>;
/// Element of R_j = k[y_1..y_n]_j in monomial coordinates.
using RPoly = Homogeneous<MonomialBasis>;

enum class Basis { monomial, divided };

/// Builds a form from coefficients given in either basis:
/// divided a_U = (monomial coefficient) * u_1! ... u_n!.
Form convert_basis(int n, int d, const IndexMap<Rational>& coeffs, Basis from);

/// Monomial-basis coefficients of f (a_U / U!).
IndexMap<Rational> monomial_coefficients(const Form& f);

/// Differential action phi(d/dx_1, ..., d/dx_n) f. In divided coordinates
/// Y^V o X^(U) = X^(U-V) when U >= V and 0 otherwise. Throws DomainError
/// when deg phi > deg f or the variable counts differ.
Form contract(const RPoly& phi, const Form& f);

/// Product in R.
RPoly multiply_r(const RPoly& phi, const RPoly& psi);

/// Product in S (forms in divided coordinates).
Form multiply_s(const Form& f, const Form& g);

/// f(M x') where x = M x' and M is (f.n x m). The result has m variables.
Form substitute(const Form& f, const ExactMatrix& m);

/// (c_1 x_1 + ... + c_n x_n)^d, with divided coefficients a_W = d! c^W.
Form linear_power(const Vector& linear, int d);

/// Product of two sparse monomial-basis polynomials with multi-index keys.
IndexMap<Rational> multiply_monomial(const IndexMap<Rational>& a, const IndexMap<Rational>& b);

/// Human-readable monomial-basis rendering, e.g. "x1^3 + 3*x1*x2^2".
std::string format_polynomial(const IndexMap<Rational>& monomial_coeffs, char var);

}  // namespace catkit
