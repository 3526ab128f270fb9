#include "catkit/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "catkit/apolarity.hpp"
#include "catkit/binary.hpp"
#include "catkit/catalecticant.hpp"
#include "catkit/error.hpp"
#include "catkit/io.hpp"
#include "catkit/sampling.hpp"
#include "catkit/varieties.hpp"

namespace catkit {
namespace {

// A trial returns an empty optional on success, a description otherwise.
using Trial = std::function<std::optional<std::string>(std::uint64_t seed)>;

struct Job {
  std::string label;
  Trial run;
};

using Failure = std::optional<std::string>;

template <class T>
std::string join(const std::vector<T>& values) {
  std::ostringstream out;
  out << "(";
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
  out << ")";
  return out.str();
}

// Pascal's triangle, kept separate from the library's binomial().
std::uint64_t pascal(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

std::size_t thread_cap() {
  std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CATKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = std::min(cap, static_cast<std::size_t>(v));
  }
  return cap;
}

// Form with rank Cat(1, d-1) = r, built from a dense random form in r
// variables embedded in n and scrambled by a unimodular substitution.
Form random_exact_rank(SplitMix64& rng, int r, int n, int d) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Form g = random_form(rng, r, d, 10);
    const Form f = substitute(embed(g, n), random_unimodular(rng, n));
    if (rank(build_cat(f, 1).body) == static_cast<std::size_t>(r)) return f;
  }
  throw InternalError("could not sample a form of the requested rank");
}

// ---------------------------------------------------------------------------

std::vector<Job> hankel_shape(std::size_t trials) {
  std::vector<Job> jobs;
  jobs.push_back({"layout d=3 i=1", [](std::uint64_t) -> Failure {
                    const auto cat = build_generic_cat(2, 3, 1);
                    const int expected[2][3][2] = {{{3, 0}, {2, 1}, {1, 2}}, {{2, 1}, {1, 2}, {0, 3}}};
                    if (cat.rows() != 2 || cat.cols() != 3) return "generic Cat(1,2;2) is not 2x3";
                    for (std::size_t r = 0; r < 2; ++r) {
                      for (std::size_t c = 0; c < 3; ++c) {
                        const auto w = cat.symbol(r, c);
                        if (w[0] != expected[r][c][0] || w[1] != expected[r][c][1]) {
                          return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") is Z" + w.str();
                        }
                      }
                    }
                    return std::nullopt;
                  }});
  for (int d = 2; d <= 10; ++d) {
    for (int i = 1; i < d; ++i) {
      jobs.push_back({"generic d=" + std::to_string(d) + " i=" + std::to_string(i), [d, i](std::uint64_t) -> Failure {
                        const auto cat = build_generic_cat(2, d, i);
                        if (cat.rows() != static_cast<std::size_t>(i + 1) || cat.cols() != static_cast<std::size_t>(d - i + 1)) {
                          return "wrong shape";
                        }
                        for (std::size_t r = 0; r < cat.rows(); ++r) {
                          for (std::size_t c = 0; c < cat.cols(); ++c) {
                            const int k = static_cast<int>(r + c);
                            const auto w = cat.symbol(r, c);
                            if (w[0] != d - k || w[1] != k) return "antidiagonal " + std::to_string(k) + " holds Z" + w.str();
                          }
                        }
                        return std::nullopt;
                      }});
      for (std::size_t t = 0; t < trials; ++t) {
        jobs.push_back({"numeric d=" + std::to_string(d) + " i=" + std::to_string(i), [d, i](std::uint64_t seed) -> Failure {
                          SplitMix64 rng(seed);
                          const Form f = random_form(rng, 2, d, 10);
                          const auto body = build_cat(f, i).body;
                          for (std::size_t r = 0; r < body.rows(); ++r) {
                            for (std::size_t c = 0; c < body.cols(); ++c) {
                              const int k = static_cast<int>(r + c);
                              if (body(r, c) != f.coefficient(MultiIndex{d - k, k})) return "entry off its antidiagonal value";
                            }
                          }
                          return std::nullopt;
                        }});
      }
    }
  }
  return jobs;
}

std::vector<Job> transpose_identity(std::size_t trials) {
  std::vector<Job> jobs;
  for (std::size_t t = 0; t < trials; ++t) {
    jobs.push_back({"random form", [](std::uint64_t seed) -> Failure {
                      SplitMix64 rng(seed);
                      const int n = static_cast<int>(rng.uniform(1, 4));
                      const int d = static_cast<int>(rng.uniform(2, 8));
                      const Form f = random_form(rng, n, d, 10);
                      for (int i = 1; i < d; ++i) {
                        const auto a = build_cat(f, i);
                        const auto b = build_cat(f, d - i);
                        if (a.row_index != b.col_index || a.col_index != b.row_index) return "index lists do not swap";
                        for (std::size_t r = 0; r < a.row_index.size(); ++r) {
                          for (std::size_t c = 0; c < a.col_index.size(); ++c) {
                            const Rational expected = f.coefficient(a.row_index[r] + a.col_index[c]);
                            if (a.body(r, c) != expected || b.body(c, r) != expected) {
                              return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " i=" + std::to_string(i) +
                                     ": mismatch at (" + a.row_index[r].str() + "," + a.col_index[c].str() + ")";
                            }
                          }
                        }
                        if (a.body.transpose() != b.body) return "transpose differs at i=" + std::to_string(i);
                      }
                      return std::nullopt;
                    }});
  }
  return jobs;
}

// f == sum of the witnesses recombined according to the tag.
bool witnesses_rebuild(const Ps2Class& cls, const Form& f) {
  const int d = f.degree();
  Form sum(f.n(), d);
  if (cls.tag == Ps2Tag::tangent_line) {
    if (cls.witnesses.size() != 2) return false;
    sum = multiply_s(cls.witnesses[0], linear_power(cls.witnesses[1].to_vector(), d - 1));
    sum *= cls.scales.at(0);
  } else {
    if (cls.witnesses.size() != cls.scales.size()) return false;
    for (std::size_t k = 0; k < cls.witnesses.size(); ++k) {
      sum += cls.scales[k] * linear_power(cls.witnesses[k].to_vector(), d);
    }
  }
  return sum == f;
}

std::vector<Job> ps2_discrimination(std::size_t trials) {
  std::vector<Job> jobs;
  for (int n : {3, 4}) {
    for (int d = 4; d <= 8; ++d) {
      const std::string where = " n=" + std::to_string(n) + " d=" + std::to_string(d);
      for (std::size_t t = 0; t < trials; ++t) {
        jobs.push_back({"ps(2)" + where, [n, d](std::uint64_t seed) -> Failure {
                          const Form f = sample({SampleFamily::ps, 2, n, d, seed});
                          if (!member_ps2(f)) return "ps(2) sample rejected";
                          const auto cls = classify_ps2(f);
                          if (cls.tag != Ps2Tag::sum_of_two) return std::string("ps(2) sample tagged ") + to_string(cls.tag);
                          if (!cls.witnesses.empty() && !witnesses_rebuild(cls, f)) return "witnesses do not rebuild f";
                          return std::nullopt;
                        }});
        jobs.push_back({"tangent" + where, [n, d](std::uint64_t seed) -> Failure {
                          const Form f = sample({SampleFamily::tangent, 0, n, d, seed});
                          if (!member_ps2(f)) return "tangent sample rejected";
                          const auto cls = classify_ps2(f);
                          if (cls.tag != Ps2Tag::tangent_line) return std::string("tangent sample tagged ") + to_string(cls.tag);
                          if (cls.witnesses.empty()) return "rational tangent sample without witnesses";
                          if (!witnesses_rebuild(cls, f)) return "witnesses do not rebuild f";
                          return std::nullopt;
                        }});
        jobs.push_back({"ps(3)" + where, [n, d](std::uint64_t seed) -> Failure {
                          const Form f = sample({SampleFamily::ps, 3, n, d, seed});
                          if (member_ps2(f)) return "ps(3) sample accepted";
                          return std::nullopt;
                        }});
      }
    }
  }
  return jobs;
}

std::vector<Job> hilbert_stratification(std::size_t trials) {
  std::vector<Job> jobs;
  for (int n : {3, 4}) {
    for (int d = 2; d <= 10; ++d) {
      for (int s = 2; 2 * s <= d + 2; ++s) {
        for (std::size_t t = 0; t < trials; ++t) {
          jobs.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d) + " s=" + std::to_string(s),
                          [n, d, s](std::uint64_t seed) -> Failure {
                            SplitMix64 rng(seed);
                            IndexMap<Rational> mono;
                            mono.emplace(MultiIndex{s - 1, d - s + 1}, 1);
                            const Form base = convert_basis(2, d, mono, Basis::monomial);
                            const Form f = substitute(embed(base, n), random_unimodular(rng, n));
                            std::vector<std::size_t> expected;
                            for (int i = 0; i <= d; ++i) expected.push_back(static_cast<std::size_t>(std::min({i + 1, s, d - i + 1})));
                            const auto h = hilbert_sequence(f).entries;
                            if (h != expected) return "H = " + join(h) + ", expected " + join(expected);
                            if (t2s_sequence(d, s).entries != expected) return "t2s_sequence disagrees";
                            return std::nullopt;
                          }});
        }
      }
    }
  }
  return jobs;
}

std::vector<Job> dimension_formula(std::size_t trials) {
  std::vector<Job> jobs;
  for (int r : {1, 2}) {
    for (int n : {3, 4}) {
      for (int d = 3; d <= 6; ++d) {
        for (std::size_t t = 0; t < trials; ++t) {
          jobs.push_back({"r=" + std::to_string(r) + " n=" + std::to_string(n) + " d=" + std::to_string(d),
                          [r, n, d](std::uint64_t seed) -> Failure {
                            SplitMix64 rng(seed);
                            const Form f = random_exact_rank(rng, r, n, d);
                            const auto expected = pascal(r + d - 1, d) + static_cast<std::uint64_t>(r * (n - r));
                            const auto got = tangent_dim_vr(f, 1, static_cast<std::size_t>(r));
                            if (got != expected) return "tangent dim " + std::to_string(got) + ", expected " + std::to_string(expected);
                            if (dim_vr(r, d, n) != expected) return "dim_vr disagrees";
                            return std::nullopt;
                          }});
        }
      }
    }
  }
  return jobs;
}

std::vector<Job> step3_identity(std::size_t trials) {
  std::vector<Job> jobs;
  for (int n : {3, 4}) {
    for (int d = 3; d <= 6; ++d) {
      for (std::size_t t = 0; t < trials; ++t) {
        jobs.push_back({"n=" + std::to_string(n) + " d=" + std::to_string(d), [n, d](std::uint64_t seed) -> Failure {
                          SplitMix64 rng(seed);
                          const Form f = random_exact_rank(rng, n - 1, n, d);
                          const auto expected = pascal(n + d - 2, d - 1) - static_cast<std::uint64_t>(n) + 1;
                          const auto got = product_slice(f, 1).dim();
                          if (got != expected) return "dim I_1 I_{d-1} = " + std::to_string(got) + ", expected " + std::to_string(expected);
                          return std::nullopt;
                        }});
      }
    }
  }
  return jobs;
}

std::vector<Job> chordal_generators(std::size_t trials) {
  std::vector<Job> jobs;
  for (int d = 4; d <= 6; ++d) {
    auto gens = std::make_shared<GeneratorSet>(merge(emit_minors(3, d, 1, 3), emit_minors(3, d, 2, 3)));
    const std::string where = " d=" + std::to_string(d);
    auto vanish = [gens, d](SampleFamily family) {
      return [gens, d, family](std::uint64_t seed) -> Failure {
        const Form f = sample({family, family == SampleFamily::ps ? 2 : 0, 3, d, seed});
        for (std::size_t k = 0; k < gens->generators.size(); ++k) {
          if (sgn(evaluate_minor(gens->generators[k], f)) != 0) return "generator " + std::to_string(k) + " nonzero";
        }
        return std::nullopt;
      };
    };
    for (std::size_t t = 0; t < trials; ++t) {
      jobs.push_back({"ps(2)" + where, vanish(SampleFamily::ps)});
      jobs.push_back({"tangent" + where, vanish(SampleFamily::tangent)});
      jobs.push_back({"ps(3)" + where, [gens, d](std::uint64_t seed) -> Failure {
                        const Form f = sample({SampleFamily::ps, 3, 3, d, seed});
                        for (const auto& g : gens->generators) {
                          if (sgn(evaluate_minor(g, f)) != 0) return std::nullopt;
                        }
                        return "every generator vanishes on a ps(3) sample";
                      }});
    }
  }
  return jobs;
}

std::vector<Job> singular_loci(std::size_t trials) {
  std::vector<Job> jobs;
  for (int d : {4, 5}) {
    auto gens = std::make_shared<GeneratorSet>(family_generators(Family::ps2(), 3, d));
    const std::size_t ambient = monomial_count(3, d);
    const std::string where = " d=" + std::to_string(d);
    for (std::size_t t = 0; t < trials; ++t) {
      jobs.push_back({"ps(2)" + where, [gens, d](std::uint64_t seed) -> Failure {
                        const Form f = sample({SampleFamily::ps, 2, 3, d, seed});
                        const auto rep = singular_test(f, Family::ps2(), *gens);
                        if (rep.tangent_dim != 6 || rep.singular) return "tangent dim " + std::to_string(rep.tangent_dim) + ", expected 6";
                        return std::nullopt;
                      }});
      jobs.push_back({"power" + where, [gens, d, ambient](std::uint64_t seed) -> Failure {
                        const Form f = sample({SampleFamily::power, 0, 3, d, seed});
                        const auto rep = singular_test(f, Family::ps2(), *gens);
                        if (rep.jacobian_rank != 0 || rep.tangent_dim != ambient || !rep.singular) {
                          return "Jacobian rank " + std::to_string(rep.jacobian_rank) + " at a power point";
                        }
                        return std::nullopt;
                      }});
    }
  }
  return jobs;
}

std::vector<Job> tangent_cross_oracle(std::size_t trials) {
  std::vector<Job> jobs;
  std::map<int, std::shared_ptr<GeneratorSet>> gens;
  for (int d = 3; d <= 5; ++d) gens[d] = std::make_shared<GeneratorSet>(family_generators(Family::vr(2), 3, d));
  for (std::size_t t = 0; t < trials; ++t) {
    jobs.push_back({"rank-2 point", [gens](std::uint64_t seed) -> Failure {
                      SplitMix64 rng(seed);
                      const int d = static_cast<int>(rng.uniform(3, 5));
                      const int kind = static_cast<int>(rng.uniform(0, 2));
                      Form f(3, d);
                      if (kind == 0) {
                        f = random_exact_rank(rng, 2, 3, d);
                      } else {
                        f = sample({kind == 1 ? SampleFamily::ps : SampleFamily::tangent, 2, 3, d, rng.next()});
                      }
                      const auto theory = tangent_dim_vr(f, 1, 2);
                      const auto jac = singular_test(f, Family::vr(2), *gens.at(d)).tangent_dim;
                      if (theory != jac) {
                        return "d=" + std::to_string(d) + ": product formula " + std::to_string(theory) + " vs Jacobian " +
                               std::to_string(jac);
                      }
                      return std::nullopt;
                    }});
  }
  return jobs;
}

// Linear forms of two distinct roots: are a and b proportional?
bool same_point(const Vector& a, const Vector& b) { return a[0] * b[1] == a[1] * b[0]; }

std::vector<Job> binary_waring(std::size_t trials) {
  std::vector<Job> jobs;
  for (std::size_t t = 0; t < trials; ++t) {
    jobs.push_back({"waring sample", [](std::uint64_t seed) -> Failure {
                      SplitMix64 rng(seed);
                      const int d = static_cast<int>(rng.uniform(2, 9));
                      const int s = static_cast<int>(rng.uniform(1, (d + 1) / 2));
                      const auto ls = random_distinct_linears(rng, s, 2, 10);
                      Form f(2, d);
                      for (const auto& l : ls) {
                        Rational c = 0;
                        while (sgn(c) == 0) c = rng.uniform(-10, 10);
                        f += c * linear_power(l, d);
                      }
                      const std::string where = "d=" + std::to_string(d) + " s=" + std::to_string(s) + ": ";
                      const auto dec = waring_decompose(f);
                      if (dec.kind != DecompositionKind::waring) return where + "kind " + to_string(dec.kind);
                      if (dec.components.size() != static_cast<std::size_t>(s)) return where + "wrong component count";
                      for (const auto& comp : dec.components) {
                        const Vector got = comp.linear.to_vector();
                        if (std::none_of(ls.begin(), ls.end(), [&](const Vector& l) { return same_point(l, got); })) {
                          return where + "recovered a linear form not in the construction";
                        }
                      }
                      if (!verify_decomposition(dec, f)) return where + "re-expansion differs";
                      return std::nullopt;
                    }});
  }
  return jobs;
}

std::vector<Job> binary_gad(std::size_t trials) {
  std::vector<Job> jobs;
  for (std::size_t t = 0; t < trials; ++t) {
    jobs.push_back({"gad sample", [](std::uint64_t seed) -> Failure {
                      SplitMix64 rng(seed);
                      for (int attempt = 0; attempt < 100; ++attempt) {
                        const int d = static_cast<int>(rng.uniform(3, 9));
                        const int s = static_cast<int>(rng.uniform(2, (d + 1) / 2));
                        // Split s into block sizes, at least one of them >= 2.
                        std::vector<int> sizes;
                        int left = s;
                        while (left > 0) {
                          const int k = static_cast<int>(rng.uniform(1, left));
                          sizes.push_back(k);
                          left -= k;
                        }
                        if (std::all_of(sizes.begin(), sizes.end(), [](int k) { return k == 1; })) continue;
                        std::sort(sizes.begin(), sizes.end());
                        const auto ls = random_distinct_linears(rng, static_cast<int>(sizes.size()), 2, 6);
                        Form f(2, d);
                        for (std::size_t k = 0; k < sizes.size(); ++k) {
                          const Form g = random_form(rng, 2, sizes[k] - 1, 6);
                          f += multiply_s(g, linear_power(ls[k], d - sizes[k] + 1));
                        }
                        if (f.is_zero() || min_apolar_degree(f) != s) continue;
                        const std::string where = "d=" + std::to_string(d) + " blocks=" + join(sizes) + ": ";
                        const auto dec = waring_decompose(f);
                        if (dec.kind != DecompositionKind::gad) return where + "kind " + to_string(dec.kind);
                        std::vector<int> got;
                        for (const auto& r : rational_roots(dec.apolar_form)) got.push_back(r.multiplicity);
                        std::sort(got.begin(), got.end());
                        if (got != sizes) return where + "root multiplicities " + join(got);
                        if (!verify_decomposition(dec, f)) return where + "re-expansion differs";
                        return std::nullopt;
                      }
                      return "could not draw a sample with the intended apolar degree";
                    }});
  }
  return jobs;
}

std::vector<Job> eagon_northcott(std::size_t) {
  std::vector<Job> jobs;
  for (int d = 4; d <= 12; ++d) {
    for (int s = 2; 2 * s <= d; ++s) {
      jobs.push_back({"d=" + std::to_string(d) + " s=" + std::to_string(s), [d, s](std::uint64_t) -> Failure {
                        const int a = d - s + 1;
                        const int e = s + 1;
                        std::int64_t sum = 0;
                        for (int j = e; j <= a; ++j) {
                          const auto term = static_cast<std::int64_t>(pascal(a, j) * pascal(j - 1, e - 1));
                          if (en_term_rank(d, s, j) != term) return "term rank at j=" + std::to_string(j);
                          sum += ((j - e) % 2 == 0 ? 1 : -1) * term;
                        }
                        if (sum != 1) return "alternating sum " + std::to_string(sum);
                        if (en_alternating_sum(d, s) != 1) return "library alternating sum differs from 1";
                        return std::nullopt;
                      }});
    }
  }
  return jobs;
}

std::vector<Job> export_roundtrip(std::size_t) {
  std::vector<Job> jobs;
  jobs.push_back({"hankel 2x2 line", [](std::uint64_t) -> Failure {
                    const std::string text = format_generators(emit_minors(2, 2, 1, 2));
                    const std::string expected = "# catkit generators n=2 d=2 i=1 r=2\nZ[2,0]*Z[0,2] - Z[1,1]^2\n";
                    if (text != expected) return "export was: " + text;
                    return std::nullopt;
                  }});
  const std::vector<std::pair<int, int>> shapes{{2, 4}, {3, 3}, {3, 4}, {3, 5}, {4, 4}};
  for (const auto& [n, d] : shapes) {
    std::vector<Family> families{Family::vr(1), Family::vr(2), Family::ps2()};
    if (d >= 4) families.push_back(Family::gor(2));
    for (const auto& family : families) {
      jobs.push_back({family.name() + " n=" + std::to_string(n) + " d=" + std::to_string(d),
                      [n, d, family](std::uint64_t) -> Failure {
                        const GeneratorSet g = family_generators(family, n, d);
                        const GeneratorSet back = parse_generators(format_generators(g));
                        if (!(back == g)) return "round trip changed the generator set";
                        return std::nullopt;
                      }});
    }
  }
  return jobs;
}

struct SuiteEntry {
  std::string name;
  std::size_t default_trials;
  std::vector<Job> (*build)(std::size_t);
};

const std::vector<SuiteEntry>& registry() {
  static const std::vector<SuiteEntry> entries{
      {"hankel-shape", 2, hankel_shape},
      {"transpose-identity", 100, transpose_identity},
      {"ps2-discrimination", 100, ps2_discrimination},
      {"hilbert-stratification", 3, hilbert_stratification},
      {"dimension-formula", 20, dimension_formula},
      {"step3-identity", 20, step3_identity},
      {"chordal-generators", 100, chordal_generators},
      {"singular-loci", 20, singular_loci},
      {"tangent-cross-oracle", 50, tangent_cross_oracle},
      {"binary-waring", 200, binary_waring},
      {"binary-gad", 50, binary_gad},
      {"eagon-northcott", 1, eagon_northcott},
      {"export-roundtrip", 1, export_roundtrip},
  };
  return entries;
}

const SuiteEntry& find_suite(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
  }();
  return names;
}

std::size_t default_trials(const std::string& name) { return find_suite(name).default_trials; }

SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  const SuiteEntry& entry = find_suite(name);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Job> jobs = entry.build(trials == 0 ? entry.default_trials : trials);

  std::vector<std::optional<SuiteFailure>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      const std::uint64_t trial_seed = splitmix64(seed ^ static_cast<std::uint64_t>(k));
      std::optional<std::string> problem;
      try {
        problem = jobs[k].run(trial_seed);
      } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
      }
      if (problem) results[k] = SuiteFailure{k, trial_seed, jobs[k].label + ": " + *problem};
    }
  };
  const std::size_t threads = std::min(thread_cap(), std::max<std::size_t>(jobs.size(), 1));
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  SuiteReport report;
  report.name = name;
  report.trials = jobs.size();
  for (auto& r : results) {
    if (r) report.failures.push_back(std::move(*r));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace catkit
