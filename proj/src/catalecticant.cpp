#include "catkit/catalecticant.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "catkit/error.hpp"

namespace catkit {
namespace {

void check_shape(int n, int d, int i) {
  if (n < 1 || d < 1) throw DomainError("catalecticant needs n >= 1 and d >= 1");
  if (i < 1 || i > d - 1) {
    throw DomainError("catalecticant index i=" + std::to_string(i) + " outside [1, " +
                      std::to_string(d - 1) + "]");
  }
}

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) return;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) {
      if (perm[a] > perm[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

ExactMatrix contraction_matrix(const Form& f, int i) {
  if (i < 0 || i > f.degree()) throw DomainError("contraction_matrix: i outside [0, d]");
  const auto rows = enumerate_monomials(f.n(), i);
  const auto cols = enumerate_monomials(f.n(), f.degree() - i);
  ExactMatrix body(rows.size(), cols.size());
  if (f.is_zero()) return body;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) body(r, c) = f.coefficient(rows[r] + cols[c]);
  }
  return body;
}

CatalecticantMatrix build_cat(const Form& f, int i) {
  check_shape(f.n(), f.degree(), i);
  return CatalecticantMatrix{f.n(),
                             f.degree(),
                             i,
                             enumerate_monomials(f.n(), i),
                             enumerate_monomials(f.n(), f.degree() - i),
                             contraction_matrix(f, i)};
}

SymbolicCatalecticant build_generic_cat(int n, int d, int i) {
  check_shape(n, d, i);
  return SymbolicCatalecticant{n, d, i, enumerate_monomials(n, i), enumerate_monomials(n, d - i)};
}

MinorPolynomial::MinorPolynomial(int n, int d, int degree) : n_(n), d_(d), degree_(degree) {}

void MinorPolynomial::add_term(Key symbols, const Rational& c) {
  if (static_cast<int>(symbols.size()) != degree_) {
    throw DomainError("minor polynomial term has the wrong degree");
  }
  if (sgn(c) == 0) return;
  std::sort(symbols.begin(), symbols.end());
  auto [it, inserted] = terms_.try_emplace(std::move(symbols), c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational MinorPolynomial::evaluate(const Vector& values) const {
  Rational total = 0;
  Rational term;
  for (const auto& [key, c] : terms_) {
    term = c;
    for (int pos : key) {
      term *= values[static_cast<std::size_t>(pos)];
      if (sgn(term) == 0) break;
    }
    total += term;
  }
  return total;
}

Rational MinorPolynomial::evaluate(const Form& f) const {
  if (f.n() != n_ || f.degree() != d_) throw DomainError("evaluate_minor: form shape mismatch");
  return evaluate(f.to_vector());
}

std::size_t GeneratorSet::zero_count() const {
  return static_cast<std::size_t>(
      std::count_if(generators.begin(), generators.end(), [](const auto& g) { return g.is_zero(); }));
}

GeneratorSet emit_minors(int n, int d, int i, int r) {
  const SymbolicCatalecticant cat = build_generic_cat(n, d, i);
  if (r < 1 || static_cast<std::size_t>(r) > std::min(cat.rows(), cat.cols())) {
    throw DomainError("minor size " + std::to_string(r) + " does not fit a " +
                      std::to_string(cat.rows()) + "x" + std::to_string(cat.cols()) + " catalecticant");
  }
  if (r > kMaxSymbolicMinor) {
    throw DomainError("symbolic minors are only expanded up to size " +
                      std::to_string(kMaxSymbolicMinor));
  }
  const MonomialIndex symbols(n, d);
  // Symbol position of every entry of the generic matrix.
  std::vector<int> entry(cat.rows() * cat.cols());
  for (std::size_t a = 0; a < cat.rows(); ++a) {
    for (std::size_t b = 0; b < cat.cols(); ++b) {
      entry[a * cat.cols() + b] = static_cast<int>(symbols.position(cat.symbol(a, b)));
    }
  }
  std::vector<std::pair<std::vector<int>, int>> perms;
  {
    std::vector<int> p(static_cast<std::size_t>(r));
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.emplace_back(p, permutation_sign(p));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  GeneratorSet out{n, d, {MinorBlock{i, r}}, {}};
  for_each_subset(cat.rows(), static_cast<std::size_t>(r), [&](const std::vector<std::size_t>& rows) {
    for_each_subset(cat.cols(), static_cast<std::size_t>(r), [&](const std::vector<std::size_t>& cols) {
      MinorPolynomial minor(n, d, r);
      minor.block_i = i;
      minor.row_subset = rows;
      minor.col_subset = cols;
      MinorPolynomial::Key key(static_cast<std::size_t>(r));
      for (const auto& [perm, sign] : perms) {
        for (int k = 0; k < r; ++k) {
          key[static_cast<std::size_t>(k)] = entry[rows[static_cast<std::size_t>(k)] * cat.cols() +
                                                   cols[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]];
        }
        minor.add_term(key, sign);
      }
      out.generators.push_back(std::move(minor));
    });
  });
  return out;
}

std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> minor_subsets(int n, int d,
                                                                                         int i, int r) {
  const SymbolicCatalecticant cat = build_generic_cat(n, d, i);
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  if (r < 1) return out;
  for_each_subset(cat.rows(), static_cast<std::size_t>(r), [&](const std::vector<std::size_t>& rows) {
    for_each_subset(cat.cols(), static_cast<std::size_t>(r),
                    [&](const std::vector<std::size_t>& cols) { out.emplace_back(rows, cols); });
  });
  return out;
}

GeneratorSet merge(GeneratorSet a, const GeneratorSet& b) {
  if (a.n != b.n || a.d != b.d) throw DomainError("merge: generator sets over different spaces");
  a.blocks.insert(a.blocks.end(), b.blocks.begin(), b.blocks.end());
  a.generators.insert(a.generators.end(), b.generators.begin(), b.generators.end());
  return a;
}

Rational evaluate_minor(const MinorPolynomial& p, const Form& f) { return p.evaluate(f); }

MinorPolynomial differentiate_minor(const MinorPolynomial& p, const MultiIndex& w) {
  if (static_cast<int>(w.size()) != p.n() || w.degree() != p.d()) {
    throw DomainError("differentiate_minor: symbol " + w.str() + " has the wrong shape");
  }
  const int target = static_cast<int>(MonomialIndex(p.n(), p.d()).position(w));
  MinorPolynomial out(p.n(), p.d(), std::max(p.degree() - 1, 0));
  for (const auto& [key, c] : p.terms()) {
    const auto first = std::find(key.begin(), key.end(), target);
    if (first == key.end()) continue;
    const auto multiplicity = std::count(key.begin(), key.end(), target);
    MinorPolynomial::Key reduced(key.begin(), first);
    reduced.insert(reduced.end(), first + 1, key.end());
    out.add_term(std::move(reduced), c * static_cast<long>(multiplicity));
  }
  return out;
}

ExactMatrix jacobian_matrix(const GeneratorSet& g, const Form& f) {
  if (f.n() != g.n || f.degree() != g.d) throw DomainError("jacobian: form shape mismatch");
  const Vector values = f.to_vector();
  ExactMatrix jac(g.generators.size(), values.size());
  Rational partial;
  for (std::size_t row = 0; row < g.generators.size(); ++row) {
    for (const auto& [key, c] : g.generators[row].terms()) {
      // d/dZ_q of c * prod Z: drop one occurrence of each distinct symbol q.
      for (std::size_t k = 0; k < key.size(); ++k) {
        if (k > 0 && key[k] == key[k - 1]) continue;
        partial = c;
        for (std::size_t m = 0; m < key.size() && sgn(partial) != 0; ++m) {
          if (m != k) partial *= values[static_cast<std::size_t>(key[m])];
        }
        if (sgn(partial) == 0) continue;
        const auto multiplicity = std::count(key.begin(), key.end(), key[k]);
        jac(row, static_cast<std::size_t>(key[k])) += partial * static_cast<long>(multiplicity);
      }
    }
  }
  return jac;
}

std::size_t jacobian_rank(const GeneratorSet& g, const Form& f) { return rank(jacobian_matrix(g, f)); }

}  // namespace catkit
