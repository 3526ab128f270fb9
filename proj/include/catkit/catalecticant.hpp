#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "catkit/form.hpp"
#include "catkit/matrix.hpp"
#include "catkit/monomial.hpp"

namespace catkit {

/// Largest minor size for which symbolic generators are expanded.
inline constexpr int kMaxSymbolicMinor = 4;

/// Matrix (a_{U+V}) with rows |U| = i and columns |V| = d - i. It is the
/// matrix of phi -> phi o f from R_{d-i} to S_i.
struct CatalecticantMatrix {
  int n = 0;
  int d = 0;
  int i = 0;
  std::vector<MultiIndex> row_index;
  std::vector<MultiIndex> col_index;
  ExactMatrix body;
};

/// Catalecticant of f for 1 <= i <= d-1; throws DomainError otherwise.
CatalecticantMatrix build_cat(const Form& f, int i);

/// Same layout as build_cat but defined for every 0 <= i <= d (the extreme
/// values give the row/column vector of all coefficients).
ExactMatrix contraction_matrix(const Form& f, int i);

/// The generic catalecticant (Z_{U+V}); entries are the multi-index W = U+V
/// naming the symbol Z_W.
struct SymbolicCatalecticant {
  int n = 0;
  int d = 0;
  int i = 0;
  std::vector<MultiIndex> row_index;
  std::vector<MultiIndex> col_index;

  std::size_t rows() const { return row_index.size(); }
  std::size_t cols() const { return col_index.size(); }
  MultiIndex symbol(std::size_t r, std::size_t c) const { return row_index[r] + col_index[c]; }
};

SymbolicCatalecticant build_generic_cat(int n, int d, int i);

/// Sparse polynomial with rational coefficients in the symbols Z_W, |W| = d.
///
/// A monomial in the Z's is stored as the sorted list of symbol positions in
/// enumerate_monomials(n, d) (repeats allowed), so terms iterate in a fixed
/// order: Z_{(2,0)} Z_{(0,2)} before Z_{(1,1)}^2.
class MinorPolynomial {
 public:
  using Key = std::vector<int>;

  MinorPolynomial() = default;
  MinorPolynomial(int n, int d, int degree);

  int n() const { return n_; }
  int d() const { return d_; }
  /// Degree in the Z symbols (the minor size for an emitted generator).
  int degree() const { return degree_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * prod Z_{symbols}; key order does not matter.
  void add_term(Key symbols, const Rational& c);

  /// Z_W := a_W from the divided coefficients of f.
  Rational evaluate(const Form& f) const;
  /// Same, with a_W given along enumerate_monomials(n, d).
  Rational evaluate(const Vector& values) const;

  friend bool operator==(const MinorPolynomial&, const MinorPolynomial&) = default;

  // Where the generator came from; empty for derived polynomials.
  int block_i = 0;
  std::vector<std::size_t> row_subset;
  std::vector<std::size_t> col_subset;

 private:
  int n_ = 0;
  int d_ = 0;
  int degree_ = 0;
  std::map<Key, Rational> terms_;
};

/// (i, d-i, r) triple: the r x r minors of Cat(i, d-i; n).
struct MinorBlock {
  int i = 0;
  int size = 0;
  friend bool operator==(const MinorBlock&, const MinorBlock&) = default;
};

struct GeneratorSet {
  int n = 0;
  int d = 0;
  std::vector<MinorBlock> blocks;
  std::vector<MinorPolynomial> generators;

  /// Number of identically-zero generators (kept for index stability).
  std::size_t zero_count() const;
  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;
};

/// All C(rows, r) * C(cols, r) r x r minors of the generic Cat(i, d-i; n),
/// ordered lexicographically by (row subset, column subset). Repeated symbols
/// are merged; minors that cancel to zero stay in place with an empty body.
/// Throws DomainError when r exceeds the matrix or kMaxSymbolicMinor.
GeneratorSet emit_minors(int n, int d, int i, int r);

/// (row subset, column subset) of every r x r minor of Cat(i, d-i; n), in
/// the order emit_minors uses.
std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> minor_subsets(int n, int d,
                                                                                         int i, int r);

/// Concatenation of generator sets over the same (n, d).
GeneratorSet merge(GeneratorSet a, const GeneratorSet& b);

/// Value of the minor polynomial at f (Z_W := a_W).
Rational evaluate_minor(const MinorPolynomial& p, const Form& f);

/// Formal partial derivative with respect to Z_W.
MinorPolynomial differentiate_minor(const MinorPolynomial& p, const MultiIndex& w);

/// |G| x dim S_d matrix of first partials of the generators, evaluated at f.
ExactMatrix jacobian_matrix(const GeneratorSet& g, const Form& f);

/// Rank of jacobian_matrix(g, f); dim S_d minus this is the dimension of the
/// Zariski tangent space at f of the scheme cut out by g.
std::size_t jacobian_rank(const GeneratorSet& g, const Form& f);

}  // namespace catkit
