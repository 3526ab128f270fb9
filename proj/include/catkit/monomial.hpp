#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "catkit/rational.hpp"

namespace catkit {

/// Exponent vector U = (u_1, ..., u_n) with |U| = u_1 + ... + u_n.
///
/// Ordering is graded lexicographic (degree first, then exponents
/// lexicographically). Every list or map of multi-indices in the library is
/// traversed in *descending* graded-lex order, see IndexMap.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> exponents);
  MultiIndex(std::initializer_list<int> exponents);

  std::size_t size() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t k) const { return exponents_[k]; }
  const std::vector<int>& exponents() const { return exponents_; }

  /// True when this index is componentwise >= other.
  bool dominates(const MultiIndex& other) const;
  /// u_1! ... u_n!
  Integer factorial_product() const;

  /// "[u1,u2,...]"
  std::string str() const;

  friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
  /// Componentwise difference; requires a.dominates(b).
  friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  int degree_ = 0;
  std::vector<int> exponents_;
};

/// Map keyed by multi-index, iterated in descending graded-lex order.
template <class V>
using IndexMap = std::map<MultiIndex, V, std::greater<>>;

/// All multi-indices of length n and degree j in descending graded-lex order.
/// This order fixes the row/column indexing of every matrix in the library.
std::vector<MultiIndex> enumerate_monomials(int n, int j);

/// Number of monomials of degree j in n variables, C(n-1+j, j).
std::size_t monomial_count(int n, int j);

/// Position lookup into enumerate_monomials(n, j).
class MonomialIndex {
 public:
  MonomialIndex(int n, int j);

  const std::vector<MultiIndex>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  /// Throws DomainError when u is not of the indexed shape.
  std::size_t position(const MultiIndex& u) const;

 private:
  std::vector<MultiIndex> monomials_;
  std::map<MultiIndex, std::size_t> positions_;
};

}  // namespace catkit
