#include "catkit/varieties.hpp"

#include <algorithm>

#include "catkit/binary.hpp"
#include "catkit/error.hpp"

namespace catkit {
namespace {

std::size_t cat_rank(const Form& f, int i) { return rank(contraction_matrix(f, i)); }

// Binary linear form in the decomposition's coordinates, pulled back to x.
Form pull_back_linear(const Form& linear, const Decomposition& dec, int n) {
  if (!dec.embedding) return linear;
  const Rational p = linear.coefficient(MultiIndex{1, 0});
  const Rational q = linear.coefficient(MultiIndex{0, 1});
  Vector coeffs(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i] = p * (*dec.embedding)(i, 0) + q * (*dec.embedding)(i, 1);
  }
  return Form::from_vector(n, 1, coeffs);
}

void require_ps2_degree(const Form& f) {
  if (f.degree() < 2) throw DomainError("PS(2) membership needs d >= 2");
}

void append_block(GeneratorSet& into, int n, int d, int i, int size) {
  if (i < 1 || i > d - 1) return;
  const std::size_t rows = monomial_count(n, i);
  const std::size_t cols = monomial_count(n, d - i);
  if (size < 1 || static_cast<std::size_t>(size) > std::min(rows, cols)) return;
  into = merge(std::move(into), emit_minors(n, d, i, size));
}

}  // namespace

EssentialReduction essential_vars(const Form& f) {
  if (f.is_zero()) throw DomainError("essential variables undefined for the zero form");
  const std::size_t n = static_cast<std::size_t>(f.n());
  const auto kernel = kernel_basis(contraction_matrix(f, f.degree() - 1));

  // Complete the kernel with unit vectors, scanning e_1, e_2, ... in order.
  std::vector<Vector> chosen = kernel;
  std::vector<Vector> complement;
  for (std::size_t k = 0; k < n && chosen.size() < n; ++k) {
    Vector e(n);
    e[k] = 1;
    chosen.push_back(e);
    if (row_space_basis(chosen, n).size() == chosen.size()) {
      complement.push_back(std::move(e));
    } else {
      chosen.pop_back();
    }
  }
  EssentialReduction out;
  out.rank = complement.size();
  out.change = ExactMatrix(n, n);
  std::size_t col = 0;
  for (const std::vector<Vector>* group : std::initializer_list<const std::vector<Vector>*>{&complement, &kernel}) {
    for (const auto& v : *group) {
      for (std::size_t i = 0; i < n; ++i) out.change(i, col) = v[i];
      ++col;
    }
  }
  std::vector<std::size_t> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = i;
  std::vector<std::size_t> first_cols(out.rank);
  for (std::size_t k = 0; k < out.rank; ++k) first_cols[k] = k;
  out.reduced = substitute(f, out.change.submatrix(rows, first_cols));
  return out;
}

bool member_vr(const Form& f, std::size_t r) {
  if (r < 1) throw DomainError("member_vr needs r >= 1");
  if (f.degree() < 1) throw DomainError("member_vr needs d >= 1");
  return cat_rank(f, 1) <= r;
}

bool member_ps2(const Form& f) {
  require_ps2_degree(f);
  return cat_rank(f, 1) <= 2 && cat_rank(f, 2) <= 2;
}

bool member_gor_leq(const Form& f, int s) {
  if (s < 2 || 2 * s > f.degree() + 2) {
    throw DomainError("Gor_<=(T_{2,s}) needs s >= 2 and 2s <= d+2 (s=" + std::to_string(s) +
                      ", d=" + std::to_string(f.degree()) + ")");
  }
  return cat_rank(f, 1) <= 2 && cat_rank(f, s) <= static_cast<std::size_t>(s);
}

Ps2Class classify_ps2(const Form& f) {
  if (!member_ps2(f)) throw DomainError("classify_ps2: form is not in PS(2, d; n)");
  Ps2Class out;
  if (f.is_zero()) return out;
  const std::size_t r = cat_rank(f, 1);
  if (r == 2 && f.degree() == 2) {
    // A rank-2 quadric is a sum of two squares; its apolar quadric is not unique.
    out.tag = Ps2Tag::sum_of_two;
    return out;
  }
  const Decomposition dec = decompose(f);
  switch (dec.kind) {
    case DecompositionKind::waring:
      out.tag = dec.components.size() == 1 ? Ps2Tag::power : Ps2Tag::sum_of_two;
      for (const auto& c : dec.components) {
        out.witnesses.push_back(pull_back_linear(c.linear, dec, f.n()));
        out.scales.push_back(c.g.coefficient(MultiIndex{0, 0}));
      }
      break;
    case DecompositionKind::gad: {
      out.tag = Ps2Tag::tangent_line;
      const auto& c = dec.components.front();
      out.witnesses.push_back(pull_back_linear(c.g, dec, f.n()));
      out.witnesses.push_back(pull_back_linear(c.linear, dec, f.n()));
      out.scales.push_back(1);
      break;
    }
    case DecompositionKind::certificate:
      out.tag = dec.structure == RootStructure::squarefree ? Ps2Tag::sum_of_two : Ps2Tag::tangent_line;
      break;
  }
  if ((out.tag == Ps2Tag::power) != (r == 1)) throw InternalError("PS(2) tag disagrees with rank");
  return out;
}

const char* to_string(Ps2Tag tag) {
  switch (tag) {
    case Ps2Tag::zero:
      return "zero";
    case Ps2Tag::power:
      return "power";
    case Ps2Tag::sum_of_two:
      return "sum_of_two";
    case Ps2Tag::tangent_line:
      return "tangent_line";
  }
  return "?";
}

SequenceT t2s_sequence(int d, int s) {
  if (s < 2 || 2 * s > d + 2) throw DomainError("T_{2,s} needs s >= 2 and 2s <= d+2");
  SequenceT out;
  for (int i = 0; i <= d; ++i) out.entries.push_back(static_cast<std::size_t>(std::min({i + 1, s, d - i + 1})));
  return out;
}

SequenceT hilbert_cap(std::size_t r, int d, int n) {
  if (n < 1 || d < 0) throw DomainError("hilbert_cap needs n >= 1, d >= 0");
  if (r > monomial_count(n, d / 2)) throw DomainError("hilbert_cap: r exceeds C(n-1+t, t), t = floor(d/2)");
  SequenceT out;
  for (int i = 0; i <= d; ++i) {
    out.entries.push_back(std::min({r, monomial_count(n, i), monomial_count(n, d - i)}));
  }
  return out;
}

Integer dim_vr(int r, int d, int n) {
  if (r < 1 || r > n - 1 || d < 1) throw DomainError("dim_vr needs 1 <= r <= n-1 and d >= 1");
  return binomial(static_cast<unsigned long>(r + d - 1), static_cast<unsigned long>(d)) + r * (n - r);
}

Integer dim_gor_t2s(int s, int n) {
  if (s < 2 || n < 2) throw DomainError("dim_gor_t2s needs s >= 2 and n >= 2");
  return 2 * s + 2 * (n - 2);
}

Integer en_term_rank(int d, int s, int j) {
  const int a = d - s + 1;
  const int e = s + 1;
  if (s < 1 || j < e || j > a) {
    throw DomainError("Eagon-Northcott term index j=" + std::to_string(j) + " outside [" +
                      std::to_string(e) + ", " + std::to_string(a) + "]");
  }
  return binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(j)) *
         binomial(static_cast<unsigned long>(j - 1), static_cast<unsigned long>(e - 1));
}

Integer en_alternating_sum(int d, int s) {
  Integer total = 0;
  for (int j = s + 1; j <= d - s + 1; ++j) {
    const Integer term = en_term_rank(d, s, j);
    if ((j - s - 1) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

std::string Family::name() const {
  switch (kind) {
    case Kind::vr:
      return "vr(" + std::to_string(param) + ")";
    case Kind::ps2:
      return "ps2";
    case Kind::gor:
      return "gor(" + std::to_string(param) + ")";
  }
  return "?";
}

GeneratorSet family_generators(const Family& family, int n, int d) {
  GeneratorSet out{n, d, {}, {}};
  switch (family.kind) {
    case Family::Kind::vr:
      if (family.param < 1) throw DomainError("vr family needs r >= 1");
      append_block(out, n, d, 1, family.param + 1);
      break;
    case Family::Kind::ps2:
      append_block(out, n, d, 1, 3);
      // For d = 3, Cat(2,1) is the transpose of Cat(1,2).
      if (d >= 4) append_block(out, n, d, 2, 3);
      break;
    case Family::Kind::gor:
      if (family.param < 2 || 2 * family.param > d) throw DomainError("gor(s) family needs s >= 2 and 2s <= d");
      append_block(out, n, d, 1, 3);
      append_block(out, n, d, family.param, family.param + 1);
      break;
  }
  return out;
}

Integer family_dimension(const Family& family, int n, int d) {
  switch (family.kind) {
    case Family::Kind::vr:
      return dim_vr(family.param, d, n);
    case Family::Kind::ps2:
      if (n < 2) throw DomainError("ps2 family needs n >= 2");
      return 2 * n;
    case Family::Kind::gor:
      return dim_gor_t2s(family.param, n);
  }
  return 0;
}

bool family_member(const Family& family, const Form& f) {
  switch (family.kind) {
    case Family::Kind::vr:
      return member_vr(f, static_cast<std::size_t>(family.param));
    case Family::Kind::ps2:
      return member_ps2(f);
    case Family::Kind::gor:
      return member_gor_leq(f, family.param);
  }
  return false;
}

SingularReport singular_test(const Form& f, const Family& family, const GeneratorSet& generators) {
  if (!family_member(family, f)) throw DomainError("singular_test: form is not in family " + family.name());
  SingularReport report;
  report.family = family.name();
  report.ambient_dim = monomial_count(f.n(), f.degree());
  report.generator_count = generators.generators.size();
  report.jacobian_rank = jacobian_rank(generators, f);
  report.tangent_dim = report.ambient_dim - report.jacobian_rank;
  report.variety_dim = family_dimension(family, f.n(), f.degree());
  report.singular = Integer(report.tangent_dim) > report.variety_dim;
  return report;
}

SingularReport singular_test(const Form& f, const Family& family) {
  return singular_test(f, family, family_generators(family, f.n(), f.degree()));
}

}  // namespace catkit
