#include "catkit/apolarity.hpp"

#include <string>

#include "catkit/catalecticant.hpp"
#include "catkit/error.hpp"

namespace catkit {
namespace {

void require_nonzero(const Form& f) {
  if (f.is_zero()) throw DomainError("apolar ideal undefined for 0");
}

GradedSubspace span_of(int n, int degree, const std::vector<RPoly>& spanning) {
  std::vector<Vector> vectors;
  vectors.reserve(spanning.size());
  for (const auto& p : spanning) vectors.push_back(p.to_vector());
  GradedSubspace out{n, degree, {}};
  for (const auto& v : row_space_basis(vectors, monomial_count(n, degree))) {
    out.basis.push_back(RPoly::from_vector(n, degree, v));
  }
  return out;
}

std::vector<RPoly> pairwise_products(const GradedSubspace& a, const GradedSubspace& b) {
  std::vector<RPoly> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& phi : a.basis) {
    for (const auto& psi : b.basis) out.push_back(multiply_r(phi, psi));
  }
  return out;
}

}  // namespace

GradedSubspace apolar_slice(const Form& f, int j) {
  require_nonzero(f);
  if (j < 0) throw DomainError("apolar_slice: negative degree");
  GradedSubspace out{f.n(), j, {}};
  if (j > f.degree()) {
    for (const auto& u : enumerate_monomials(f.n(), j)) {
      RPoly e(f.n(), j);
      e.add(u, 1);
      out.basis.push_back(std::move(e));
    }
    return out;
  }
  // Columns of the contraction matrix with row degree d-j are indexed by R_j.
  for (const auto& v : kernel_basis(contraction_matrix(f, f.degree() - j))) {
    out.basis.push_back(RPoly::from_vector(f.n(), j, v));
  }
  return out;
}

HilbertSequence hilbert_sequence(const Form& f) {
  require_nonzero(f);
  const int d = f.degree();
  HilbertSequence h;
  h.entries.assign(static_cast<std::size_t>(d) + 1, 1);
  for (int i = 1; i < d; ++i) h.entries[static_cast<std::size_t>(i)] = rank(contraction_matrix(f, i));
  for (int i = 0; i <= d; ++i) {
    if (h[static_cast<std::size_t>(i)] != h[static_cast<std::size_t>(d - i)]) {
      throw InternalError("Hilbert sequence is not symmetric");
    }
  }
  return h;
}

GradedSubspace product_slice(const Form& f, int i) {
  require_nonzero(f);
  if (i < 1 || i > f.degree() - 1) throw DomainError("product_slice: i outside [1, d-1]");
  const GradedSubspace a = apolar_slice(f, i);
  const GradedSubspace b = apolar_slice(f, f.degree() - i);
  return span_of(f.n(), f.degree(), pairwise_products(a, b));
}

std::size_t tangent_dim_vr(const Form& f, int i, std::size_t r) {
  const std::size_t actual = rank(build_cat(f, i).body);
  if (actual != r) {
    throw DomainError("tangent formula applied off its rank stratum (rank " + std::to_string(actual) +
                      ", expected " + std::to_string(r) + ")");
  }
  // Ann(0) = R, so the product is all of R_d.
  if (f.is_zero()) return 0;
  return monomial_count(f.n(), f.degree()) - product_slice(f, i).dim();
}

GradedSubspace square_slice(const Form& f) {
  require_nonzero(f);
  const int d = f.degree();
  std::vector<GradedSubspace> slices;
  for (int i = 0; i <= d; ++i) slices.push_back(apolar_slice(f, i));
  std::vector<RPoly> spanning;
  // I_i I_{d-i} = I_{d-i} I_i, so half the range suffices.
  for (int i = 1; 2 * i <= d; ++i) {
    auto products = pairwise_products(slices[static_cast<std::size_t>(i)],
                                      slices[static_cast<std::size_t>(d - i)]);
    spanning.insert(spanning.end(), std::make_move_iterator(products.begin()),
                    std::make_move_iterator(products.end()));
  }
  return span_of(f.n(), d, spanning);
}

std::size_t tangent_dim_gor(const Form& f) {
  return monomial_count(f.n(), f.degree()) - square_slice(f).dim();
}

}  // namespace catkit
