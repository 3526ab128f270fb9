#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "catkit/form.hpp"
#include "catkit/matrix.hpp"

namespace catkit {

enum class RootStructure { squarefree, repeated };

/// A point [p : q] of P^1 with phi(p, q) = 0, normalized to coprime integers
/// with first nonzero coordinate positive, and its multiplicity. It pairs
/// with the linear form p x_1 + q x_2, which phi's factor (q y_1 - p y_2)
/// annihilates.
struct BinaryRoot {
  Integer p;
  Integer q;
  int multiplicity = 0;
  friend bool operator==(const BinaryRoot&, const BinaryRoot&) = default;
};

/// Least s >= 1 with I_s != 0 for a nonzero binary form.
int min_apolar_degree(const Form& f);

/// Generator of I_s, s = min_apolar_degree(f), scaled to primitive integer
/// coefficients with positive leading coefficient. Throws DomainError
/// ("ambiguous stratum") when 2s > d+1, where I_s is not one-dimensional.
RPoly apolar_generator(const Form& f);

/// Square-free test on a nonzero binary form via gcd(p, p') of the
/// dehomogenization, with the root at infinity read off the y_1-degree drop.
RootStructure squarefree_classify(const RPoly& phi);

/// All rational roots of a nonzero binary form, with multiplicities, in
/// ascending order of (p, q).
std::vector<BinaryRoot> rational_roots(const RPoly& phi);

enum class DecompositionKind { waring, gad, certificate };

/// One summand G * L^exponent.
struct DecompositionComponent {
  Form g;        // degree d_k - 1 (a constant for Waring summands)
  Form linear;   // degree 1
  int exponent;  // d - d_k + 1
};

struct Decomposition {
  DecompositionKind kind = DecompositionKind::certificate;
  std::vector<DecompositionComponent> components;
  /// The apolar generator phi of the binary form, degree s.
  RPoly apolar_form{2, 0};
  RootStructure structure = RootStructure::squarefree;
  /// For forms in n != 2 variables: binary coordinates z = E^T x (E is n x 2)
  /// with f(x) = h(E^T x), and `section` N (n x 2) with h(z) = f(N z).
  std::optional<ExactMatrix> embedding;
  std::optional<ExactMatrix> section;
};

/// Waring or generalized additive decomposition of a binary form, following
/// the root structure of its apolar generator. Irrational root sets yield a
/// certificate carrying phi. Throws DomainError for n != 2, f = 0 or the
/// ambiguous stratum 2s > d+1.
Decomposition waring_decompose(const Form& f);

/// Same for a form with at most two essential variables in any n >= 1; the
/// binary coordinates are recorded in `embedding` and `section`.
Decomposition decompose(const Form& f);

/// Sum of the components, as a binary form.
Form expand(const Decomposition& dec);

/// Re-expands the components (or, for certificates, checks phi o h = 0) and
/// compares with f exactly.
bool verify_decomposition(const Decomposition& dec, const Form& f);

const char* to_string(DecompositionKind kind);
const char* to_string(RootStructure structure);

}  // namespace catkit
