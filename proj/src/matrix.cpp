#include "catkit/matrix.hpp"

#include <utility>

#include "catkit/error.hpp"

namespace catkit {
namespace {

// Integer matrix obtained by clearing denominators row by row. Row scaling
// keeps rank and multiplies the determinant by the product of the scales.
struct IntegerRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> entries;
  Integer scale = 1;

  Integer& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

IntegerRows clear_denominators(const ExactMatrix& m) {
  IntegerRows out{m.rows(), m.cols(), std::vector<Integer>(m.rows() * m.cols()), 1};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer lcm = 1;
    for (const Rational& x : m.row(r)) {
      if (x.get_den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      out.at(r, c) = x.get_num() * (lcm / x.get_den());
    }
    out.scale *= lcm;
  }
  return out;
}

void swap_rows(IntegerRows& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
}

// Fraction-free forward elimination. Returns the rank and the number of row
// swaps performed; on return the last pivot holds the leading principal minor
// of the pivot rows/columns.
struct BareissResult {
  std::size_t rank = 0;
  std::size_t swaps = 0;
  bool full_columns = true;
};

BareissResult bareiss(IntegerRows& a) {
  BareissResult result;
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && a.at(p, c) == 0) ++p;
    if (p == a.rows) {
      result.full_columns = false;
      continue;
    }
    if (p != r) {
      swap_rows(a, p, r);
      ++result.swaps;
    }
    const Integer pivot = a.at(r, c);
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      const Integer lead = a.at(i, c);
      for (std::size_t j = c + 1; j < a.cols; ++j) {
        Integer& x = a.at(i, j);
        tmp = pivot * x;
        tmp -= lead * a.at(r, j);
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a.at(i, c) = 0;
    }
    prev = pivot;
    ++r;
  }
  result.rank = r;
  return result;
}

Rational cofactor_determinant(const ExactMatrix& m) {
  switch (m.rows()) {
    case 0:
      return 1;
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }
}

}  // namespace

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DomainError("matrix entry count does not match its shape");
  }
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix out(rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < ncols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

ExactMatrix ExactMatrix::identity(std::size_t size) {
  ExactMatrix out(size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = 1;
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> row_pos,
                                   std::span<const std::size_t> col_pos) const {
  ExactMatrix out(row_pos.size(), col_pos.size());
  for (std::size_t r = 0; r < row_pos.size(); ++r) {
    for (std::size_t c = 0; c < col_pos.size(); ++c) out(r, c) = (*this)(row_pos[r], col_pos[c]);
  }
  return out;
}

bool ExactMatrix::is_zero() const {
  for (const Rational& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix sum shape mismatch");
  ExactMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] += b.entries_[k];
  return out;
}

Vector operator*(const ExactMatrix& a, const Vector& v) {
  if (a.cols() != v.size()) throw DomainError("matrix-vector shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  }
  return out;
}

Echelon reduce(const ExactMatrix& m) {
  Echelon out{m, {}};
  ExactMatrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    }
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Eliminate along the shorter side.
  IntegerRows a = m.rows() <= m.cols() ? clear_denominators(m.transpose()) : clear_denominators(m);
  return bareiss(a).rank;
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const Echelon e = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational bareiss_determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntegerRows a = clear_denominators(m);
  const BareissResult res = bareiss(a);
  if (res.rank < a.rows || !res.full_columns) return 0;
  Rational det(a.at(a.rows - 1, a.cols - 1), a.scale);
  det.canonicalize();
  return res.swaps % 2 == 0 ? det : Rational(-det);
}

Rational determinant(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() <= 3) return cofactor_determinant(m);
  return bareiss_determinant(m);
}

std::optional<Vector> solve(const ExactMatrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DomainError("right-hand side length mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const Echelon e = reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) x[e.pivots[k]] = e.reduced(k, m.cols());
  return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const Echelon e = reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  ExactMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  }
  return out;
}

std::vector<Vector> row_space_basis(const std::vector<Vector>& vectors, std::size_t dim) {
  ExactMatrix stacked(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) throw DomainError("vector length mismatch");
    for (std::size_t c = 0; c < dim; ++c) stacked(r, c) = vectors[r][c];
  }
  const Echelon e = reduce(stacked);
  std::vector<Vector> basis;
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    const auto row = e.reduced.row(k);
    basis.emplace_back(row.begin(), row.end());
  }
  return basis;
}

}  // namespace catkit
