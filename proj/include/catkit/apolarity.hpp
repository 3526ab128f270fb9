#pragma once

#include <cstddef>
#include <vector>

#include "catkit/form.hpp"

namespace catkit {

/// A linear subspace of R_j given by linearly independent basis elements.
struct GradedSubspace {
  int n = 0;
  int degree = 0;
  std::vector<RPoly> basis;

  std::size_t dim() const { return basis.size(); }
};

/// Hilbert sequence (h_0, ..., h_d) of A_f = R / Ann(f).
struct HilbertSequence {
  std::vector<std::size_t> entries;

  std::size_t operator[](std::size_t i) const { return entries[i]; }
  std::size_t size() const { return entries.size(); }
  friend bool operator==(const HilbertSequence&, const HilbertSequence&) = default;
};

/// I_j = {phi in R_j : phi o f = 0}. For j > d this is all of R_j.
/// Throws DomainError for the zero form.
GradedSubspace apolar_slice(const Form& f, int j);

/// h_i = rank Cat_f(i, d-i) for 0 < i < d, h_0 = h_d = 1.
/// Throws DomainError for the zero form, InternalError if the result is not
/// symmetric.
HilbertSequence hilbert_sequence(const Form& f);

/// Span of I_i * I_{d-i} inside R_d, reduced to an echelon basis.
GradedSubspace product_slice(const Form& f, int i);

/// dim S_d - dim I_i I_{d-i}: the tangent space dimension at f of the scheme
/// cut out by the (r+1)-minors of Cat(i, d-i). Only valid when
/// rank Cat_f(i, d-i) == r; throws DomainError otherwise.
std::size_t tangent_dim_vr(const Form& f, int i, std::size_t r);

/// dim S_d - dim (I^2)_d, with (I^2)_d = sum over 0 < i < d of I_i I_{d-i}.
std::size_t tangent_dim_gor(const Form& f);

/// Span of sum over 0 < i < d of I_i I_{d-i}, the degree-d part of I^2.
GradedSubspace square_slice(const Form& f);

}  // namespace catkit
