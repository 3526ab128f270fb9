#include "doctest.h"
#include "helpers.hpp"

#include "catkit/catalecticant.hpp"
#include "catkit/error.hpp"
#include "catkit/io.hpp"

using namespace catkit;
using namespace testing;

namespace {

// d/dh p(a + h e_k) at h = 0 by exact Lagrange interpolation through
// h = 0..deg.
Rational numeric_partial(const MinorPolynomial& p, Vector a, std::size_t k) {
  const int deg = p.degree();
  Rational out = 0;
  for (int node = 0; node <= deg; ++node) {
    Vector x = a;
    x[k] += node;
    const Rational value = p.evaluate(x);
    // L_node'(0) for nodes 0..deg.
    Rational weight = 0;
    for (int m = 0; m <= deg; ++m) {
      if (m == node) continue;
      Rational term = Rational(1) / Rational(node - m);
      for (int j = 0; j <= deg; ++j) {
        if (j == node || j == m) continue;
        term *= Rational(-j) / Rational(node - j);
      }
      weight += term;
    }
    out += weight * value;
  }
  return out;
}

MinorPolynomial hankel_minor() {
  MinorPolynomial p(2, 2, 2);
  p.add_term({0, 2}, 1);
  p.add_term({1, 1}, -1);
  return p;
}

}  // namespace

TEST_CASE("build_cat examples") {
  const Form f = mono(2, 4, {{{4, 0}, 1}, {{0, 4}, 1}});
  // Divided coefficients are 24; scale the expected pattern accordingly.
  const auto cat = build_cat((Rational(1, 24)) * f, 2);
  CHECK(cat.body == ExactMatrix::from_rows({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
  CHECK(rank(cat.body) == 2);
  CHECK(build_cat(Form(3, 4), 1).body.is_zero());
  CHECK_THROWS_AS(build_cat(f, 0), DomainError);
  CHECK_THROWS_AS(build_cat(f, 4), DomainError);
  CHECK(contraction_matrix(f, 0).rows() == 1);
  CHECK(contraction_matrix(f, 0).cols() == 5);
  CHECK(contraction_matrix(f, 4).cols() == 1);
}

TEST_CASE("build_cat shape, entries and linearity") {
  SplitMix64 rng(31);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    const int d = static_cast<int>(rng.uniform(2, 6));
    const int i = static_cast<int>(rng.uniform(1, d - 1));
    const Form f = random_form(rng, n, d, 9);
    const Form g = random_form(rng, n, d, 9);
    const auto cat = build_cat(f, i);
    CHECK(cat.body.rows() == oracle::choose(n - 1 + i, i));
    CHECK(cat.body.cols() == oracle::choose(n - 1 + d - i, d - i));
    for (std::size_t r = 0; r < cat.row_index.size(); ++r)
      for (std::size_t c = 0; c < cat.col_index.size(); ++c)
        CHECK(cat.body(r, c) == f.coefficient(cat.row_index[r] + cat.col_index[c]));
    CHECK(build_cat(f + g, i).body == cat.body + build_cat(g, i).body);
  }
}

TEST_CASE("catalecticant rank is invariant under unimodular substitution") {
  SplitMix64 rng(32);
  for (int t = 0; t < 30; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const int d = static_cast<int>(rng.uniform(2, 6));
    const int r = static_cast<int>(rng.uniform(1, n));
    Form f(n, d);
    for (const auto& l : random_distinct_linears(rng, r, n, 4)) f += linear_power(l, d);
    const Form g = substitute(f, random_unimodular(rng, n));
    for (int i = 1; i < d; ++i) CHECK(rank(build_cat(g, i).body) == rank(build_cat(f, i).body));
  }
}

TEST_CASE("generic catalecticant layouts") {
  const auto h = build_generic_cat(2, 3, 1);
  REQUIRE(h.rows() == 2);
  REQUIRE(h.cols() == 3);
  CHECK(h.symbol(0, 0) == MultiIndex{3, 0});
  CHECK(h.symbol(0, 2) == MultiIndex{1, 2});
  CHECK(h.symbol(1, 0) == MultiIndex{2, 1});
  CHECK(h.symbol(1, 2) == MultiIndex{0, 3});
  for (int d = 2; d <= 10; ++d)
    for (int i = 1; i < d; ++i) {
      const auto g = build_generic_cat(2, d, i);
      for (std::size_t r = 0; r + 1 < g.rows(); ++r)
        for (std::size_t c = 1; c < g.cols(); ++c) CHECK(g.symbol(r, c) == g.symbol(r + 1, c - 1));
    }
  const auto s = build_generic_cat(3, 2, 1);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) CHECK(s.symbol(r, c) == s.symbol(c, r));
  CHECK(s.symbol(0, 1) == MultiIndex{1, 1, 0});
}

TEST_CASE("emit_minors counts") {
  // 3 x 15 generic Cat(1, 4; 3): C(3,3) * C(15,3).
  CHECK(emit_minors(3, 5, 1, 3).generators.size() == 455);
  // 3 x 10 generic Cat(1, 3; 3).
  CHECK(emit_minors(3, 4, 1, 3).generators.size() == 120);
  CHECK(emit_minors(3, 4, 2, 2).generators.size() == 15 * 15);
  CHECK(minor_subsets(3, 4, 2, 2).size() == 225);
  CHECK_THROWS_AS(emit_minors(2, 4, 1, 3), DomainError);
  CHECK_THROWS_AS(emit_minors(4, 10, 5, 5), DomainError);
}

TEST_CASE("the 2x2 Hankel minor") {
  const auto g = emit_minors(2, 2, 1, 2);
  REQUIRE(g.generators.size() == 1);
  CHECK(g.generators[0].terms() == hankel_minor().terms());
  CHECK(format_minor(g.generators[0]) == "Z[2,0]*Z[0,2] - Z[1,1]^2");
  CHECK(g.zero_count() == 0);
  // x1^2 + x2^2 has divided coefficients 2, 2.
  CHECK(evaluate_minor(g.generators[0], mono(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}})) == 4);
  CHECK(evaluate_minor(g.generators[0], Form(2, 2)) == 0);
}

TEST_CASE("minors of the generic symmetric 3x3 matrix") {
  const auto g = emit_minors(3, 2, 1, 2);
  CHECK(g.generators.size() == 9);
  const auto sym = build_generic_cat(3, 2, 1);
  SplitMix64 rng(33);
  for (int t = 0; t < 20; ++t) {
    const Form f = random_form(rng, 3, 2, 9);
    for (const auto& p : g.generators) {
      oracle::Dense m(2, std::vector<Rational>(2));
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) m[a][b] = f.coefficient(sym.symbol(p.row_subset[a], p.col_subset[b]));
      CHECK(evaluate_minor(p, f) == oracle::leibniz_det(m));
    }
  }
}

TEST_CASE("zero minors are kept in place") {
  const auto g = emit_minors(2, 3, 1, 2);
  CHECK(g.generators.size() == 3);
  const auto zeros = g.zero_count();
  std::size_t counted = 0;
  for (const auto& p : g.generators) counted += p.is_zero() ? 1 : 0;
  CHECK(zeros == counted);
  const auto h = emit_minors(3, 4, 2, 3);
  std::size_t zero_in_h = 0;
  for (const auto& p : h.generators) zero_in_h += p.is_zero() ? 1 : 0;
  CHECK(h.zero_count() == zero_in_h);
  CHECK(h.generators.size() == 20 * 20);
}

TEST_CASE("evaluate_minor equals the numeric determinant") {
  SplitMix64 rng(34);
  int checked = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 5; ++d) {
      for (int i = 1; i < d; ++i) {
        const auto rows = monomial_count(n, i);
        const auto cols = monomial_count(n, d - i);
        for (int r = 1; r <= std::min<int>(3, static_cast<int>(std::min(rows, cols))); ++r) {
          const auto g = emit_minors(n, d, i, r);
          for (int t = 0; t < 20; ++t) {
            const Form f = random_form(rng, n, d, 9);
            const auto body = build_cat(f, i).body;
            const auto& p = g.generators[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(g.generators.size()) - 1))];
            CHECK(evaluate_minor(p, f) == oracle::leibniz_det(dense(body.submatrix(p.row_subset, p.col_subset))));
            ++checked;
          }
        }
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("differentiate_minor") {
  const auto d11 = differentiate_minor(hankel_minor(), MultiIndex{1, 1});
  MinorPolynomial expected(2, 2, 1);
  expected.add_term({1}, -2);
  CHECK(d11 == expected);
  MinorPolynomial p(2, 2, 1);
  p.add_term({0}, 5);
  CHECK(differentiate_minor(p, MultiIndex{0, 2}).is_zero());
  CHECK_THROWS_AS(differentiate_minor(p, MultiIndex{1, 0}), DomainError);

  SplitMix64 rng(35);
  const auto g = emit_minors(3, 4, 2, 3);
  const auto symbols = enumerate_monomials(3, 4);
  for (int t = 0; t < 30; ++t) {
    const auto& a = g.generators[static_cast<std::size_t>(rng.uniform(0, 399))];
    const auto& b = g.generators[static_cast<std::size_t>(rng.uniform(0, 399))];
    const auto& w = symbols[static_cast<std::size_t>(rng.uniform(0, 14))];
    MinorPolynomial sum = a;
    for (const auto& [key, c] : b.terms()) sum.add_term(key, c);
    MinorPolynomial dsum = differentiate_minor(a, w);
    const MinorPolynomial db = differentiate_minor(b, w);
    for (const auto& [key, c] : db.terms()) dsum.add_term(key, c);
    CHECK(differentiate_minor(sum, w) == dsum);
  }
}

TEST_CASE("jacobian entries match numeric partials") {
  SplitMix64 rng(36);
  const auto g = merge(emit_minors(3, 4, 1, 3), emit_minors(3, 4, 2, 2));
  for (int t = 0; t < 3; ++t) {
    const Form f = random_form(rng, 3, 4, 5);
    const Vector a = f.to_vector();
    const auto jac = jacobian_matrix(g, f);
    REQUIRE(jac.rows() == g.generators.size());
    REQUIRE(jac.cols() == 15);
    for (int s = 0; s < 40; ++s) {
      const auto row = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(jac.rows()) - 1));
      const auto col = static_cast<std::size_t>(rng.uniform(0, 14));
      CHECK(jac(row, col) == numeric_partial(g.generators[row], a, col));
    }
  }
}

TEST_CASE("jacobian rank examples") {
  const auto g = emit_minors(3, 4, 1, 3);
  SplitMix64 rng(37);
  for (int t = 0; t < 5; ++t) {
    CHECK(jacobian_rank(g, linear_power(random_linear(rng, 3, 9), 4)) == 0);
    const auto ls = random_distinct_linears(rng, 2, 3, 9);
    const Form f = linear_power(ls[0], 4) + linear_power(ls[1], 4);
    CHECK(15 - jacobian_rank(g, f) == 7);
  }
  CHECK(jacobian_rank(g, Form(3, 4)) == 0);
  CHECK_THROWS_AS(jacobian_rank(g, Form(3, 5)), DomainError);
}

TEST_CASE("merge requires matching spaces") {
  CHECK_THROWS_AS(merge(emit_minors(2, 3, 1, 2), emit_minors(2, 4, 1, 2)), DomainError);
  const auto m = merge(emit_minors(3, 4, 1, 2), emit_minors(3, 4, 2, 2));
  CHECK(m.blocks.size() == 2);
  CHECK(m.generators.size() == 3 * 45 + 225);
}
