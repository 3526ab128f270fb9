#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "catkit/rational.hpp"

namespace catkit {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Builds from nested rows; all rows must have the same length.
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static ExactMatrix identity(std::size_t size);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  ExactMatrix transpose() const;
  /// Submatrix on the given row and column positions, in the given order.
  ExactMatrix submatrix(std::span<const std::size_t> row_pos,
                        std::span<const std::size_t> col_pos) const;

  bool is_zero() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend Vector operator*(const ExactMatrix& a, const Vector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row echelon form over Q together with its pivot columns.
struct Echelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan reduction with first-nonzero pivoting in scan order.
Echelon reduce(const ExactMatrix& m);

/// Exact rank via fraction-free (Bareiss) elimination on row-scaled integers.
std::size_t rank(const ExactMatrix& m);

/// Basis of {v : Mv = 0}. One vector per free column (column order), with a 1
/// in its free position and zeros in the other free positions.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

/// Exact determinant: cofactor expansion up to 3x3, Bareiss above.
/// Throws DomainError for non-square input.
Rational determinant(const ExactMatrix& m);
Rational bareiss_determinant(const ExactMatrix& m);

/// A solution of Mx = b with all free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<Vector> solve(const ExactMatrix& m, const Vector& b);

/// Inverse of a square matrix; throws DomainError when singular.
ExactMatrix inverse(const ExactMatrix& m);

/// The nonzero rows of the reduced echelon form of the matrix whose rows are
/// `vectors`, i.e. a canonical basis of their span.
std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t dim);

}  // namespace catkit
