#include "doctest.h"
#include "helpers.hpp"

#include "catkit/apolarity.hpp"
#include "catkit/catalecticant.hpp"
#include "catkit/error.hpp"
#include "catkit/varieties.hpp"

#include <numeric>

using namespace catkit;
using namespace testing;

TEST_CASE("member_vr") {
  for (int d = 2; d <= 6; ++d) CHECK(member_vr(mono(3, d, {{{d, 0, 0}, 1}, {{0, d, 0}, 1}}), 2));
  SplitMix64 rng(61);
  for (int t = 0; t < 10; ++t) CHECK_FALSE(member_vr(random_form(rng, 3, 4, 9), 2));
  CHECK(member_vr(Form(3, 4), 1));
  CHECK_THROWS_AS(member_vr(Form(3, 4), 0), DomainError);
}

TEST_CASE("essential_vars") {
  const Form f = mono(3, 4, {{{4, 0, 0}, 1}, {{3, 1, 0}, 4}, {{2, 2, 0}, 6}, {{1, 3, 0}, 4}, {{0, 4, 0}, 1}});
  const auto red = essential_vars(f);
  CHECK(red.rank == 1);
  CHECK(red.reduced.n() == 1);
  CHECK(red.reduced.coefficients().size() == 1);

  for (int d = 1; d <= 5; ++d) {
    const Form p = mono(3, d, {{{d, 0, 0}, 1}});
    const auto r = essential_vars(p);
    CHECK(r.rank == 1);
    CHECK(r.change == ExactMatrix::identity(3));
    CHECK(r.reduced == mono(1, d, {{{d}, 1}}));
  }

  SplitMix64 rng(62);
  for (int t = 0; t < 30; ++t) {
    const int n = static_cast<int>(rng.uniform(2, 4));
    const int d = static_cast<int>(rng.uniform(2, 5));
    const int r = static_cast<int>(rng.uniform(1, n));
    const Form g = substitute(embed(random_form(rng, r, d, 5), n), random_unimodular(rng, n));
    if (g.is_zero()) continue;
    const auto red = essential_vars(g);
    CHECK(red.rank == rank(build_cat(g, 1).body));
    CHECK(red.reduced.n() == static_cast<int>(red.rank));
    // x' = M^{-1} x recovers g from the reduced form.
    const ExactMatrix inv = inverse(red.change);
    std::vector<std::size_t> all(static_cast<std::size_t>(n)), first(red.rank);
    std::iota(all.begin(), all.end(), 0);
    std::iota(first.begin(), first.end(), 0);
    CHECK(substitute(red.reduced, inv.submatrix(first, all)) == g);
    if (red.rank == static_cast<std::size_t>(n)) CHECK(red.change == ExactMatrix::identity(static_cast<std::size_t>(n)));
  }
  CHECK_THROWS_AS(essential_vars(Form(3, 3)), DomainError);
}

TEST_CASE("member_ps2") {
  SplitMix64 rng(63);
  for (int d = 3; d <= 7; ++d) {
    const auto ls = random_distinct_linears(rng, 2, 3, 9);
    CHECK(member_ps2(linear_power(ls[0], d) + linear_power(ls[1], d)));
    CHECK(member_ps2(mono(3, d, {{{1, d - 1, 0}, 1}})));
    CHECK_FALSE(member_ps2(mono(3, d, {{{d, 0, 0}, 1}, {{0, d, 0}, 1}, {{0, 0, d}, 1}})));
  }
  CHECK(member_ps2(Form(3, 2)));
  CHECK_THROWS_AS(member_ps2(mono(3, 1, {{{1, 0, 0}, 1}})), DomainError);
  // d = 3: PS(2) membership reduces to rank Cat(1,2) <= 2.
  for (int t = 0; t < 20; ++t) {
    const Form f = substitute(embed(random_form(rng, 2, 3, 5), 3), random_unimodular(rng, 3));
    CHECK(member_ps2(f) == member_vr(f, 2));
  }
}

TEST_CASE("classify_ps2") {
  CHECK(classify_ps2(Form(3, 4)).tag == Ps2Tag::zero);
  const auto a = classify_ps2(mono(2, 4, {{{4, 0}, 1}, {{0, 4}, 1}}));
  CHECK(a.tag == Ps2Tag::sum_of_two);
  REQUIRE(a.witnesses.size() == 2);
  Form rebuilt(2, 4);
  for (std::size_t k = 0; k < 2; ++k) rebuilt += a.scales[k] * linear_power(a.witnesses[k].to_vector(), 4);
  CHECK(rebuilt == mono(2, 4, {{{4, 0}, 1}, {{0, 4}, 1}}));
  const auto b = classify_ps2(mono(2, 4, {{{1, 3}, 1}}));
  CHECK(b.tag == Ps2Tag::tangent_line);
  REQUIRE(b.witnesses.size() == 2);
  CHECK(classify_ps2(mono(3, 5, {{{0, 0, 5}, 7}})).tag == Ps2Tag::power);
  // Irrational pair: x1^3 + 6 x1 x2^2 in three variables.
  const auto c = classify_ps2(mono(3, 3, {{{3, 0, 0}, 2}, {{1, 2, 0}, 12}}));
  CHECK(c.tag == Ps2Tag::sum_of_two);
  CHECK(c.witnesses.empty());
  CHECK(classify_ps2(mono(3, 2, {{{1, 1, 0}, 1}})).tag == Ps2Tag::sum_of_two);
  CHECK_THROWS_AS(classify_ps2(mono(3, 4, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}})), DomainError);

  SplitMix64 rng(64);
  for (int t = 0; t < 30; ++t) {
    const int n = static_cast<int>(rng.uniform(3, 4));
    const int d = static_cast<int>(rng.uniform(3, 7));
    const Form f = sample({SampleFamily::ps, 2, n, d, rng.next()});
    CHECK(classify_ps2(f).tag == Ps2Tag::sum_of_two);
    const Form g = sample({SampleFamily::tangent, 0, n, d, rng.next()});
    CHECK(classify_ps2(g).tag == Ps2Tag::tangent_line);
  }
}

TEST_CASE("member_gor_leq") {
  const Form f = mono(2, 5, {{{2, 3}, 1}});
  CHECK(member_gor_leq(f, 3));
  CHECK(hilbert_sequence(f).entries == std::vector<std::size_t>{1, 2, 3, 3, 2, 1});
  CHECK_FALSE(member_gor_leq(f, 2));
  CHECK_THROWS_AS(member_gor_leq(f, 1), DomainError);
  CHECK_THROWS_AS(member_gor_leq(f, 4), DomainError);
  SplitMix64 rng(65);
  for (int t = 0; t < 30; ++t) {
    const int d = static_cast<int>(rng.uniform(2, 9));
    const int n = static_cast<int>(rng.uniform(2, 4));
    const Form g = substitute(embed(random_form(rng, 2, d, 5), n), random_unimodular(rng, n));
    const int s_max = (d + 2) / 2;
    if (2 * s_max >= d + 1) CHECK(member_gor_leq(g, s_max) == member_vr(g, 2));
    // Nesting: H = T_{2,s'} implies membership for all s >= s'.
    if (g.is_zero()) continue;
    const auto h = hilbert_sequence(g);
    if (h[1] != 2) continue;
    const int s_here = static_cast<int>(*std::max_element(h.entries.begin(), h.entries.end()));
    for (int s = std::max(2, s_here); 2 * s <= d + 2; ++s) CHECK(member_gor_leq(g, s));
  }
}

TEST_CASE("sequences") {
  CHECK(t2s_sequence(5, 2).entries == std::vector<std::size_t>{1, 2, 2, 2, 2, 1});
  CHECK(t2s_sequence(6, 3).entries == std::vector<std::size_t>{1, 2, 3, 3, 3, 2, 1});
  CHECK_THROWS_AS(t2s_sequence(5, 4), DomainError);
  CHECK_THROWS_AS(t2s_sequence(5, 1), DomainError);
  CHECK(hilbert_cap(2, 5, 3).entries == std::vector<std::size_t>{1, 2, 2, 2, 2, 1});
  for (int n = 2; n <= 5; ++n) {
    const auto cap = hilbert_cap(static_cast<std::size_t>(n), 6, n);
    CHECK(cap.entries[0] == 1);
    CHECK(cap.entries[1] == static_cast<std::size_t>(n));
  }
  CHECK_THROWS_AS(hilbert_cap(100, 4, 3), DomainError);
  SplitMix64 rng(66);
  for (int t = 0; t < 40; ++t) {
    const int d = static_cast<int>(rng.uniform(2, 12));
    const int s = static_cast<int>(rng.uniform(2, (d + 2) / 2));
    const auto seq = t2s_sequence(d, s).entries;
    CHECK(std::equal(seq.begin(), seq.end(), seq.rbegin()));
    const int n = static_cast<int>(rng.uniform(1, 5));
    const auto cap = hilbert_cap(1, d, n).entries;
    CHECK(std::equal(cap.begin(), cap.end(), cap.rbegin()));
  }
}

TEST_CASE("t2s_sequence matches the monomial stratum in n variables") {
  for (int n = 2; n <= 4; ++n)
    for (int d = 2; d <= 8; ++d)
      for (int s = 2; 2 * s <= d + 2; ++s)
        CHECK(hilbert_sequence(embed(mono(2, d, {{{s - 1, d - s + 1}, 1}}), n)).entries == t2s_sequence(d, s).entries);
}

TEST_CASE("dimension formulas") {
  CHECK(dim_vr(2, 4, 3) == 7);
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) CHECK(dim_vr(1, d, n) == n);
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 8; ++d)
      CHECK(Integer(oracle::choose(n - 1 + d, d)) - dim_vr(n - 1, d, n) == oracle::choose(n + d - 2, d - 1) - n + 1);
  CHECK_THROWS_AS(dim_vr(3, 4, 3), DomainError);
  CHECK(dim_gor_t2s(2, 3) == 6);
  CHECK(family_dimension(Family::ps2(), 4, 5) == 8);
}

TEST_CASE("Eagon-Northcott term ranks") {
  CHECK(en_term_rank(5, 2, 3) == 4);
  CHECK(en_term_rank(5, 2, 4) == 3);
  CHECK_THROWS_AS(en_term_rank(5, 2, 2), DomainError);
  CHECK_THROWS_AS(en_term_rank(5, 2, 5), DomainError);
  for (int d = 4; d <= 12; ++d)
    for (int s = 2; 2 * s <= d; ++s) {
      Integer sum = 0;
      for (int j = s + 1; j <= d - s + 1; ++j)
        sum += ((j - s - 1) % 2 ? -1 : 1) * oracle::choose(d - s + 1, j) * oracle::choose(j - 1, s);
      CHECK(sum == 1);
      CHECK(en_alternating_sum(d, s) == 1);
    }
}

TEST_CASE("family generators") {
  const auto vr = family_generators(Family::vr(2), 3, 4);
  REQUIRE(vr.blocks.size() == 1);
  CHECK(vr.blocks[0] == MinorBlock{1, 3});
  const auto ps = family_generators(Family::ps2(), 3, 4);
  CHECK(ps.blocks.size() == 2);
  CHECK(family_generators(Family::ps2(), 3, 3).blocks.size() == 1);
  CHECK(family_generators(Family::vr(2), 2, 4).blocks.empty());
  const auto gor = family_generators(Family::gor(3), 2, 6);
  REQUIRE(gor.blocks.size() == 1);
  CHECK(gor.blocks[0] == MinorBlock{3, 4});
  CHECK_THROWS_AS(family_generators(Family::gor(3), 2, 5), DomainError);
}

TEST_CASE("singular_test examples") {
  SplitMix64 rng(67);
  for (int d = 4; d <= 5; ++d) {
    const auto power = singular_test(linear_power(random_linear(rng, 3, 9), d), Family::ps2());
    CHECK(power.jacobian_rank == 0);
    CHECK(power.tangent_dim == monomial_count(3, d));
    CHECK(power.singular);
    const auto ls = random_distinct_linears(rng, 2, 3, 9);
    const auto smooth = singular_test(linear_power(ls[0], d) + linear_power(ls[1], d), Family::ps2());
    CHECK(smooth.tangent_dim == 6);
    CHECK(smooth.variety_dim == 6);
    CHECK_FALSE(smooth.singular);
  }
  CHECK_THROWS_AS(singular_test(mono(3, 4, {{{4, 0, 0}, 1}, {{0, 4, 0}, 1}, {{0, 0, 4}, 1}}), Family::ps2()),
                  DomainError);

  // Gor_<=(T_{2,3}) in two variables, d = 6: the determinant of Cat(3,3).
  const auto gens = family_generators(Family::gor(3), 2, 6);
  for (int t = 0; t < 5; ++t) {
    const Form at_t23 = sample({SampleFamily::gor, 3, 2, 6, rng.next()});
    REQUIRE(hilbert_sequence(at_t23).entries == t2s_sequence(6, 3).entries);
    const auto smooth = singular_test(at_t23, Family::gor(3), gens);
    CHECK(smooth.tangent_dim == 6);
    CHECK_FALSE(smooth.singular);
    const Form at_t22 = sample({SampleFamily::gor, 2, 2, 6, rng.next()});
    REQUIRE(hilbert_sequence(at_t22).entries == t2s_sequence(6, 2).entries);
    CHECK(singular_test(at_t22, Family::gor(3), gens).singular);
  }
  // Gor_<=(T_{2,2}) in three variables agrees with PS(2).
  for (int t = 0; t < 3; ++t) {
    const Form f = sample({SampleFamily::gor, 2, 3, 4, rng.next()});
    CHECK(singular_test(f, Family::gor(2)).tangent_dim == 6);
  }
}

TEST_CASE("product formula matches the Jacobian at exact-rank points") {
  SplitMix64 rng(68);
  const auto gens = family_generators(Family::vr(2), 3, 4);
  for (int t = 0; t < 8; ++t) {
    const Form f = substitute(embed(random_form(rng, 2, 4, 7), 3), random_unimodular(rng, 3));
    if (rank(build_cat(f, 1).body) != 2) continue;
    CHECK(tangent_dim_vr(f, 1, 2) == singular_test(f, Family::vr(2), gens).tangent_dim);
  }
}
