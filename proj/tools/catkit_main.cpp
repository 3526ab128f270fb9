// catkit command-line interface. Results are printed as JSON on stdout.
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "catkit/apolarity.hpp"
#include "catkit/binary.hpp"
#include "catkit/catalecticant.hpp"
#include "catkit/error.hpp"
#include "catkit/io.hpp"
#include "catkit/sampling.hpp"
#include "catkit/suites.hpp"
#include "catkit/varieties.hpp"

namespace {

using nlohmann::json;
using namespace catkit;

struct Options {
  std::string form_path;
  int i = 0;
  int r = 0;
  int s = 0;
  int n = 0;
  int d = 0;
  int size = 0;
  std::string family;
  std::string out_path;
  std::string suite = "all";
  std::size_t trials = 0;
  std::uint64_t seed = 1;
  int bound = 10;
  std::string basis = "divided";
  bool no_scramble = false;
};

Form load_form(const Options& opt) {
  if (!opt.form_path.empty() && opt.form_path != "-") return read_form(opt.form_path);
  const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return parse_form(text);
}

Basis basis_of(const std::string& name) {
  if (name == "monomial") return Basis::monomial;
  if (name == "divided") return Basis::divided;
  throw FormatError("--basis must be monomial or divided");
}

json index_list(const std::vector<MultiIndex>& idx) {
  json out = json::array();
  for (const auto& u : idx) out.push_back(u.exponents());
  return out;
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (const auto& x : m.row(r)) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rpoly_json(const RPoly& p) {
  json terms = json::array();
  for (const auto& [u, c] : p.coefficients()) terms.push_back({{"exp", u.exponents()}, {"coeff", to_string(c)}});
  return {{"n", p.n()}, {"degree", p.degree()}, {"text", format_polynomial(p.coefficients(), 'y')}, {"terms", terms}};
}

Family parse_variety(const Options& opt) {
  if (opt.family == "vr") {
    if (opt.r < 1) throw FormatError("--family vr needs --r >= 1");
    return Family::vr(opt.r);
  }
  if (opt.family == "ps2") return Family::ps2();
  if (opt.family == "gor") {
    if (opt.s < 2) throw FormatError("--family gor needs --s >= 2");
    return Family::gor(opt.s);
  }
  throw FormatError("--family must be vr, ps2 or gor");
}

json report_json(const SingularReport& rep) {
  return {{"family", rep.family},         {"ambient_dim", rep.ambient_dim},
          {"generators", rep.generator_count}, {"jacobian_rank", rep.jacobian_rank},
          {"tangent_dim", rep.tangent_dim},   {"variety_dim", to_string(rep.variety_dim)},
          {"singular", rep.singular}};
}

int cmd_cat(const Options& opt) {
  const Form f = load_form(opt);
  const auto cat = build_cat(f, opt.i);
  json out{{"n", cat.n},
           {"d", cat.d},
           {"i", cat.i},
           {"rows", index_list(cat.row_index)},
           {"cols", index_list(cat.col_index)},
           {"matrix", matrix_json(cat.body)},
           {"rank", rank(cat.body)}};
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_rank(const Options& opt) {
  const Form f = load_form(opt);
  json out{{"i", opt.i}, {"rank", rank(build_cat(f, opt.i).body)}};
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_hilbert(const Options& opt) {
  const Form f = load_form(opt);
  std::cout << json{{"hilbert", hilbert_sequence(f).entries}}.dump() << "\n";
  return 0;
}

int cmd_member(const Options& opt) {
  const Form f = load_form(opt);
  const Family fam = parse_variety(opt);
  std::cout << json{{"family", fam.name()}, {"member", family_member(fam, f)}}.dump() << "\n";
  return 0;
}

int cmd_classify(const Options& opt) {
  const Form f = load_form(opt);
  json out{{"member_ps2", member_ps2(f)}};
  if (out["member_ps2"].get<bool>()) {
    const auto cls = classify_ps2(f);
    out["tag"] = to_string(cls.tag);
    json w = json::array();
    for (const auto& l : cls.witnesses) w.push_back(form_to_json(l, Basis::monomial));
    out["witnesses"] = w;
    json sc = json::array();
    for (const auto& c : cls.scales) sc.push_back(to_string(c));
    out["scales"] = sc;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_decompose(const Options& opt) {
  const Form f = load_form(opt);
  const auto dec = decompose(f);
  json comps = json::array();
  for (const auto& c : dec.components) {
    comps.push_back({{"g", form_to_json(c.g, Basis::monomial)},
                     {"linear", form_to_json(c.linear, Basis::monomial)},
                     {"exponent", c.exponent}});
  }
  json out{{"kind", to_string(dec.kind)},
           {"structure", to_string(dec.structure)},
           {"apolar_form", rpoly_json(dec.apolar_form)},
           {"components", comps},
           {"verified", verify_decomposition(dec, f)}};
  if (dec.embedding) out["embedding"] = matrix_json(*dec.embedding);
  if (dec.section) out["section"] = matrix_json(*dec.section);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_tangent(const Options& opt) {
  const Form f = load_form(opt);
  json out;
  if (opt.family == "vr" || opt.family.empty()) {
    const int i = opt.i == 0 ? 1 : opt.i;
    const std::size_t r = opt.r > 0 ? static_cast<std::size_t>(opt.r) : rank(build_cat(f, i).body);
    out["product_formula"] = {{"i", i}, {"r", r}, {"tangent_dim", tangent_dim_vr(f, i, r)}};
    if (i == 1 && r >= 1) out["jacobian"] = report_json(singular_test(f, Family::vr(static_cast<int>(r))));
  } else {
    const Family fam = parse_variety(opt);
    if (fam.kind == Family::Kind::gor) out["square_formula"] = {{"tangent_dim", tangent_dim_gor(f)}};
    out["jacobian"] = report_json(singular_test(f, fam));
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_minors(const Options& opt) {
  const GeneratorSet g = emit_minors(opt.n, opt.d, opt.i, opt.size);
  if (opt.out_path.empty()) {
    std::cout << format_generators(g);
  } else {
    export_generators(g, opt.out_path);
    std::cout << json{{"path", opt.out_path}, {"generators", g.generators.size()}, {"zero", g.zero_count()}}.dump()
              << "\n";
  }
  return 0;
}

int cmd_sample(const Options& opt) {
  SampleSpec spec;
  parse_family(opt.family, spec);
  spec.n = opt.n;
  spec.d = opt.d;
  spec.seed = opt.seed;
  spec.coeff_bound = opt.bound;
  spec.scramble = !opt.no_scramble;
  std::cout << form_to_json(sample(spec), basis_of(opt.basis)).dump() << "\n";
  return 0;
}

int cmd_verify(const Options& opt) {
  std::vector<std::string> names = opt.suite == "all" ? suite_names() : std::vector<std::string>{opt.suite};
  json reports = json::array();
  bool ok = true;
  for (const auto& name : names) {
    const auto rep = run_suite(name, opt.trials, opt.seed);
    json failures = json::array();
    for (const auto& f : rep.failures) {
      failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"detail", f.detail}});
    }
    reports.push_back({{"suite", rep.name},
                       {"trials", rep.trials},
                       {"passed", rep.passed()},
                       {"failures", failures},
                       {"wall_seconds", rep.wall_seconds}});
    ok = ok && rep.passed();
  }
  std::cout << reports.dump(2) << "\n";
  return ok ? 0 : 2;
}

int cmd_dims(const Options& opt) {
  json out{{"family", opt.family}};
  if (opt.family == "vr") {
    out["dim"] = to_string(dim_vr(opt.r, opt.d, opt.n));
  } else if (opt.family == "ps2") {
    out["dim"] = to_string(family_dimension(Family::ps2(), opt.n, opt.d));
  } else if (opt.family == "gor") {
    out["dim"] = to_string(dim_gor_t2s(opt.s, opt.n));
    out["sequence"] = t2s_sequence(opt.d, opt.s).entries;
  } else if (opt.family == "cap") {
    out["sequence"] = hilbert_cap(static_cast<std::size_t>(opt.r), opt.d, opt.n).entries;
  } else if (opt.family == "en") {
    json terms = json::array();
    for (int j = opt.s + 1; j <= opt.d - opt.s + 1; ++j) terms.push_back({{"j", j}, {"rank", to_string(en_term_rank(opt.d, opt.s, j))}});
    out["terms"] = terms;
    out["alternating_sum"] = to_string(en_alternating_sum(opt.d, opt.s));
  } else {
    throw FormatError("--family must be vr, ps2, gor, cap or en");
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catkit: catalecticants, apolarity and binary decompositions over Q"};
  app.require_subcommand(1);
  Options opt;

  auto with_form = [&](CLI::App* sub) {
    sub->add_option("--form", opt.form_path, "form file (JSON); standard input when absent or '-'");
  };
  int (*handler)(const Options&) = nullptr;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&handler, fn] { handler = fn; });
    return sub;
  };

  auto* cat = add("cat", "print the catalecticant Cat_f(i, d-i)", cmd_cat);
  with_form(cat);
  cat->add_option("--i", opt.i, "row degree")->required();

  auto* rk = add("rank", "rank of Cat_f(i, d-i)", cmd_rank);
  with_form(rk);
  rk->add_option("--i", opt.i, "row degree")->required();

  with_form(add("hilbert", "Hilbert sequence of A_f", cmd_hilbert));

  auto* member = add("member", "membership in V_r(1,d-1;n), PS(2,d;n) or Gor_<=(T_{2,s})", cmd_member);
  with_form(member);
  member->add_option("--family", opt.family, "vr | ps2 | gor")->required();
  member->add_option("--r", opt.r, "r for vr");
  member->add_option("--s", opt.s, "s for gor");

  with_form(add("classify", "PS(2) normal form with rational witnesses", cmd_classify));
  with_form(add("decompose", "Waring / generalized additive decomposition (at most 2 essential variables)",
                cmd_decompose));

  auto* tangent = add("tangent", "tangent space dimensions", cmd_tangent);
  with_form(tangent);
  tangent->add_option("--family", opt.family, "vr (default) | ps2 | gor");
  tangent->add_option("--i", opt.i, "catalecticant degree for vr (default 1)");
  tangent->add_option("--r", opt.r, "rank for vr (default: the rank at f)");
  tangent->add_option("--s", opt.s, "s for gor");

  auto* minors = add("minors", "export the r x r minors of the generic Cat(i, d-i; n)", cmd_minors);
  minors->add_option("--n", opt.n, "variables")->required();
  minors->add_option("--d", opt.d, "degree")->required();
  minors->add_option("--i", opt.i, "row degree")->required();
  minors->add_option("--size", opt.size, "minor size")->required();
  minors->add_option("--out", opt.out_path, "output file (stdout when absent)");

  auto* smp = add("sample", "seeded random form from a family", cmd_sample);
  smp->add_option("--family", opt.family, "power | ps(r) | tangent | gor(s) | generic")->required();
  smp->add_option("--n", opt.n, "variables")->required();
  smp->add_option("--d", opt.d, "degree")->required();
  smp->add_option("--seed", opt.seed, "64-bit seed");
  smp->add_option("--bound", opt.bound, "coefficient bound");
  smp->add_option("--basis", opt.basis, "output basis: divided | monomial");
  smp->add_flag("--no-scramble", opt.no_scramble, "gor(s): keep the two-variable construction");

  auto* verify = add("verify", "run property suites", cmd_verify);
  verify->add_option("--suite", opt.suite, "suite name or 'all'");
  verify->add_option("--trials", opt.trials, "trials per configuration (0: suite default)");
  verify->add_option("--seed", opt.seed, "suite seed");

  auto* dims = add("dims", "dimension formulas and sequences", cmd_dims);
  dims->add_option("--family", opt.family, "vr | ps2 | gor | cap | en")->required();
  dims->add_option("--n", opt.n, "variables");
  dims->add_option("--d", opt.d, "degree");
  dims->add_option("--r", opt.r, "r");
  dims->add_option("--s", opt.s, "s");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    return handler(opt);
  } catch (const InternalError& e) {
    std::cerr << "catkit: internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "catkit: " << e.what() << "\n";
    return 1;
  }
}
