#include "catkit/binary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "catkit/apolarity.hpp"
#include "catkit/error.hpp"
#include "catkit/varieties.hpp"

namespace catkit {
namespace {

void require_binary(const Form& f) {
  if (f.n() != 2) throw DomainError("binary engine needs a form in 2 variables");
  if (f.is_zero()) throw DomainError("binary engine undefined for the zero form");
}

// ---- integer factorization (divisor candidates for the rational root scan)

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, g = 1;
    auto step = [&](const Integer& v) {
      Integer out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = step(x);
      y = step(step(y));
      Integer diff = abs(x - y);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (g != n) return g;
  }
}

void factor_into(Integer n, std::map<Integer, int>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++primes[n];
    return;
  }
  const Integer split = pollard_rho(n);
  factor_into(split, primes);
  factor_into(n / split, primes);
}

std::vector<Integer> positive_divisors(const Integer& value) {
  Integer n = abs(value);
  std::map<Integer, int> primes;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++primes[Integer(p)];
      n /= p;
    }
  }
  factor_into(n, primes);
  std::vector<Integer> divisors{1};
  for (const auto& [p, e] : primes) {
    const std::size_t existing = divisors.size();
    Integer power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t m = 0; m < existing; ++m) divisors.push_back(divisors[m] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// ---- univariate helpers; coefficients listed from highest degree down

using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;  // lowest degree first

// Coefficients c_k of y1^(s-k) y2^k scaled to primitive integers.
IntPoly binary_coefficients(const RPoly& phi) {
  const int s = phi.degree();
  Integer lcm = 1;
  for (const auto& [u, c] : phi.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out(static_cast<std::size_t>(s) + 1, 0);
  for (const auto& [u, c] : phi.coefficients()) {
    out[static_cast<std::size_t>(u[1])] = c.get_num() * (lcm / c.get_den());
  }
  Integer g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1) {
    for (auto& c : out) c /= g;
  }
  return out;
}

bool is_root(const IntPoly& poly, const Integer& a, const Integer& b) {
  // sum P_k a^(m-k) b^k, the numerator of P(a/b) * b^m
  Integer value = 0;
  Integer bpow = 1;
  const std::size_t m = poly.size() - 1;
  std::vector<Integer> apow(poly.size(), 1);
  for (std::size_t k = 1; k <= m; ++k) apow[k] = apow[k - 1] * a;
  for (std::size_t k = 0; k <= m; ++k) {
    value += poly[k] * apow[m - k] * bpow;
    bpow *= b;
  }
  return value == 0;
}

// Divides by (b t - a); returns false if the division is not exact.
bool divide_linear(IntPoly& poly, const Integer& a, const Integer& b) {
  std::vector<Rational> q;
  Rational carry = 0;
  for (std::size_t k = 0; k + 1 < poly.size(); ++k) {
    carry = (Rational(poly[k]) + a * carry) / b;
    q.push_back(carry);
  }
  if (Rational(poly.back()) + a * carry != 0) return false;
  IntPoly out;
  for (const auto& c : q) {
    if (c.get_den() != 1) return false;
    out.push_back(c.get_num());
  }
  poly = std::move(out);
  return true;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * static_cast<long>(k));
  return out;
}

void trim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
    trim(a);
  }
  return a;
}

std::size_t gcd_degree(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? 0 : a.size() - 1;
}

BinaryRoot normalized_root(Integer p, Integer q, int multiplicity) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 0) {
    p /= g;
    q /= g;
  }
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  return BinaryRoot{p, q, multiplicity};
}

Form linear_form(const Integer& p, const Integer& q) {
  Form out(2, 1);
  out.add(MultiIndex{1, 0}, p);
  out.add(MultiIndex{0, 1}, q);
  return out;
}

Decomposition solve_components(const Form& f, const RPoly& phi, RootStructure structure,
                               const std::vector<BinaryRoot>& roots) {
  const int d = f.degree();
  std::vector<Vector> columns;
  struct Block {
    Form linear;
    int g_degree;
    int exponent;
  };
  std::vector<Block> blocks;
  for (const auto& root : roots) {
    const int gdeg = root.multiplicity - 1;
    const int exponent = d - root.multiplicity + 1;
    const Form lpow = linear_power(Vector{Rational(root.p), Rational(root.q)}, exponent);
    for (const auto& u : enumerate_monomials(2, gdeg)) {
      const Form gbasis = convert_basis(2, gdeg, IndexMap<Rational>{{u, Rational(1)}}, Basis::monomial);
      columns.push_back(multiply_s(gbasis, lpow).to_vector());
    }
    blocks.push_back(Block{linear_form(root.p, root.q), gdeg, exponent});
  }
  ExactMatrix system(static_cast<std::size_t>(d) + 1, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < system.rows(); ++r) system(r, c) = columns[c][r];
  }
  const auto solution = solve(system, f.to_vector());
  if (!solution) throw InternalError("additive decomposition system is inconsistent");

  Decomposition dec;
  dec.kind = structure == RootStructure::squarefree ? DecompositionKind::waring : DecompositionKind::gad;
  dec.apolar_form = phi;
  dec.structure = structure;
  std::size_t next = 0;
  for (const auto& block : blocks) {
    IndexMap<Rational> gcoeffs;
    for (const auto& u : enumerate_monomials(2, block.g_degree)) gcoeffs.emplace(u, (*solution)[next++]);
    dec.components.push_back(
        DecompositionComponent{convert_basis(2, block.g_degree, gcoeffs, Basis::monomial), block.linear,
                               block.exponent});
  }
  return dec;
}

}  // namespace

int min_apolar_degree(const Form& f) {
  require_binary(f);
  for (int s = 1; s <= f.degree(); ++s) {
    if (apolar_slice(f, s).dim() >= 1) return s;
  }
  throw InternalError("no apolar form up to the degree of f");
}

RPoly apolar_generator(const Form& f) {
  const int s = min_apolar_degree(f);
  if (2 * s > f.degree() + 1) {
    throw DomainError("ambiguous stratum: apolar degree " + std::to_string(s) +
                      " exceeds (d+1)/2, generator is not unique");
  }
  const GradedSubspace slice = apolar_slice(f, s);
  if (slice.dim() != 1) throw InternalError("minimal apolar slice is not one-dimensional");
  const IntPoly coeffs = binary_coefficients(slice.basis.front());
  const auto lead = std::find_if(coeffs.begin(), coeffs.end(), [](const Integer& c) { return c != 0; });
  const int sign = *lead < 0 ? -1 : 1;
  RPoly out(2, s);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    out.add(MultiIndex{s - static_cast<int>(k), static_cast<int>(k)}, Rational(coeffs[k] * sign));
  }
  return out;
}

RootStructure squarefree_classify(const RPoly& phi) {
  if (phi.n() != 2 || phi.is_zero()) throw DomainError("squarefree_classify needs a nonzero binary form");
  const IntPoly c = binary_coefficients(phi);
  std::size_t at_infinity = 0;
  while (c[at_infinity] == 0) ++at_infinity;
  if (at_infinity >= 2) return RootStructure::repeated;
  // p(t) = phi(t, 1), lowest degree first.
  RatPoly p;
  for (std::size_t k = c.size(); k-- > at_infinity;) p.push_back(Rational(c[k]));
  return gcd_degree(p, derivative(p)) == 0 ? RootStructure::squarefree : RootStructure::repeated;
}

std::vector<BinaryRoot> rational_roots(const RPoly& phi) {
  if (phi.n() != 2 || phi.is_zero()) throw DomainError("rational_roots needs a nonzero binary form");
  IntPoly c = binary_coefficients(phi);
  std::vector<BinaryRoot> roots;
  std::size_t at_infinity = 0;
  while (c[at_infinity] == 0) ++at_infinity;
  if (at_infinity > 0) roots.push_back(normalized_root(1, 0, static_cast<int>(at_infinity)));

  IntPoly poly(c.begin() + static_cast<std::ptrdiff_t>(at_infinity), c.end());
  int at_zero = 0;
  while (poly.size() > 1 && poly.back() == 0) {
    poly.pop_back();
    ++at_zero;
  }
  if (at_zero > 0) roots.push_back(normalized_root(0, 1, at_zero));

  if (poly.size() > 1) {
    const auto lead_divisors = positive_divisors(poly.front());
    const auto const_divisors = positive_divisors(poly.back());
    for (const auto& b : lead_divisors) {
      for (const auto& a_abs : const_divisors) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a_abs.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        for (int sign : {1, -1}) {
          const Integer a = a_abs * sign;
          if (poly.size() <= 1 || !is_root(poly, a, b)) continue;
          int mult = 0;
          while (poly.size() > 1 && divide_linear(poly, a, b)) ++mult;
          roots.push_back(normalized_root(a, b, mult));
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(), [](const BinaryRoot& x, const BinaryRoot& y) {
    return x.p != y.p ? x.p < y.p : x.q < y.q;
  });
  return roots;
}

Decomposition waring_decompose(const Form& f) {
  require_binary(f);
  const RPoly phi = apolar_generator(f);
  const RootStructure structure = squarefree_classify(phi);
  const auto roots = rational_roots(phi);
  int found = 0;
  for (const auto& r : roots) found += r.multiplicity;
  if (found == phi.degree()) return solve_components(f, phi, structure, roots);
  Decomposition dec;
  dec.kind = DecompositionKind::certificate;
  dec.apolar_form = phi;
  dec.structure = structure;
  return dec;
}

Decomposition decompose(const Form& f) {
  if (f.is_zero()) throw DomainError("cannot decompose the zero form");
  if (f.n() == 2) return waring_decompose(f);
  ExactMatrix section(static_cast<std::size_t>(f.n()), 2);
  ExactMatrix embedding(static_cast<std::size_t>(f.n()), 2);
  if (f.n() == 1) {
    section(0, 0) = 1;
    embedding(0, 0) = 1;
  } else {
    const EssentialReduction red = essential_vars(f);
    if (red.rank > 2) {
      throw DomainError("form has " + std::to_string(red.rank) +
                        " essential variables; binary decomposition needs at most 2");
    }
    const ExactMatrix inv = inverse(red.change);
    for (std::size_t i = 0; i < section.rows(); ++i) {
      for (std::size_t k = 0; k < 2; ++k) {
        section(i, k) = red.change(i, k);
        embedding(i, k) = inv(k, i);
      }
    }
  }
  Decomposition dec = waring_decompose(substitute(f, section));
  dec.embedding = embedding;
  dec.section = section;
  return dec;
}

Form expand(const Decomposition& dec) {
  int d = 0;
  if (!dec.components.empty()) {
    const auto& c = dec.components.front();
    d = c.g.degree() + c.exponent;
  }
  Form out(2, d);
  for (const auto& c : dec.components) {
    out += multiply_s(c.g, linear_power(c.linear.to_vector(), c.exponent));
  }
  return out;
}

bool verify_decomposition(const Decomposition& dec, const Form& f) {
  if (dec.embedding.has_value() != dec.section.has_value()) return false;
  if (dec.embedding && dec.embedding->rows() != static_cast<std::size_t>(f.n())) return false;
  if (!dec.embedding && f.n() != 2) return false;

  if (dec.kind == DecompositionKind::certificate) {
    const Form h = dec.embedding ? substitute(f, *dec.section) : f;
    if (dec.embedding && substitute(h, dec.embedding->transpose()) != f) return false;
    if (dec.apolar_form.is_zero() || dec.apolar_form.degree() > h.degree()) return false;
    return contract(dec.apolar_form, h).is_zero();
  }

  if (dec.components.empty()) return false;
  for (const auto& c : dec.components) {
    if (c.linear.degree() != 1 || c.linear.n() != 2 || c.g.n() != 2) return false;
    if (c.g.degree() + c.exponent != f.degree()) return false;
    if (dec.kind == DecompositionKind::waring && (c.g.degree() != 0 || c.exponent != f.degree())) {
      return false;
    }
  }
  const Form h = expand(dec);
  if (dec.embedding) return substitute(h, dec.embedding->transpose()) == f;
  return h == f;
}

const char* to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::waring:
      return "waring";
    case DecompositionKind::gad:
      return "gad";
    case DecompositionKind::certificate:
      return "certificate";
  }
  return "?";
}

const char* to_string(RootStructure structure) {
  return structure == RootStructure::squarefree ? "squarefree" : "repeated";
}

}  // namespace catkit
