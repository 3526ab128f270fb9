// Python bindings. Forms cross the boundary as JSON text in the form-file
// format; the pure-Python wrapper in catkit/__init__.py converts dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "catkit/apolarity.hpp"
#include "catkit/binary.hpp"
#include "catkit/catalecticant.hpp"
#include "catkit/error.hpp"
#include "catkit/io.hpp"
#include "catkit/sampling.hpp"
#include "catkit/suites.hpp"
#include "catkit/varieties.hpp"

namespace py = pybind11;
using nlohmann::json;
using namespace catkit;

namespace {

Family family_of(const std::string& name, int param) {
  if (name == "vr") return Family::vr(param);
  if (name == "ps2") return Family::ps2();
  if (name == "gor") return Family::gor(param);
  throw FormatError("family must be vr, ps2 or gor");
}

std::vector<std::vector<std::string>> matrix_strings(const ExactMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& x : m.row(r)) out[r].push_back(to_string(x));
  return out;
}

std::string classify_json(const std::string& form) {
  const auto cls = classify_ps2(parse_form(form));
  json out{{"tag", to_string(cls.tag)}, {"witnesses", json::array()}, {"scales", json::array()}};
  for (const auto& w : cls.witnesses) out["witnesses"].push_back(form_to_json(w, Basis::monomial));
  for (const auto& c : cls.scales) out["scales"].push_back(to_string(c));
  return out.dump();
}

std::string decompose_json(const std::string& form) {
  const Form f = parse_form(form);
  const auto dec = decompose(f);
  json comps = json::array();
  for (const auto& c : dec.components) {
    comps.push_back({{"g", form_to_json(c.g, Basis::monomial)},
                     {"linear", form_to_json(c.linear, Basis::monomial)},
                     {"exponent", c.exponent}});
  }
  return json{{"kind", to_string(dec.kind)},
              {"structure", to_string(dec.structure)},
              {"apolar_form", format_polynomial(dec.apolar_form.coefficients(), 'y')},
              {"components", comps},
              {"verified", verify_decomposition(dec, f)}}
      .dump();
}

std::string suite_json(const std::string& name, std::size_t trials, std::uint64_t seed) {
  const auto rep = run_suite(name, trials, seed);
  json failures = json::array();
  for (const auto& f : rep.failures) failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"detail", f.detail}});
  return json{{"suite", rep.name},
              {"trials", rep.trials},
              {"passed", rep.passed()},
              {"failures", failures},
              {"wall_seconds", rep.wall_seconds}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "catkit core (exact catalecticant and apolarity computations)";
  py::register_exception<Error>(m, "CatkitError", PyExc_ValueError);

  m.def("normalize", [](const std::string& form, const std::string& basis) {
    return form_to_json(parse_form(form), basis == "monomial" ? Basis::monomial : Basis::divided).dump();
  });
  m.def("catalecticant", [](const std::string& form, int i) { return matrix_strings(build_cat(parse_form(form), i).body); });
  m.def("cat_rank", [](const std::string& form, int i) { return rank(build_cat(parse_form(form), i).body); });
  m.def("hilbert_sequence", [](const std::string& form) { return hilbert_sequence(parse_form(form)).entries; });
  m.def("member", [](const std::string& form, const std::string& family, int param) {
    return family_member(family_of(family, param), parse_form(form));
  });
  m.def("classify_ps2", &classify_json);
  m.def("decompose", &decompose_json);
  m.def("tangent_dim_vr", [](const std::string& form, int i, std::size_t r) {
    return tangent_dim_vr(parse_form(form), i, r);
  });
  m.def("tangent_dim_gor", [](const std::string& form) { return tangent_dim_gor(parse_form(form)); });
  m.def("singular_test", [](const std::string& form, const std::string& family, int param) {
    const auto rep = singular_test(parse_form(form), family_of(family, param));
    return json{{"family", rep.family},
                {"jacobian_rank", rep.jacobian_rank},
                {"tangent_dim", rep.tangent_dim},
                {"variety_dim", to_string(rep.variety_dim)},
                {"singular", rep.singular}}
        .dump();
  });
  m.def("minors", [](int n, int d, int i, int size) { return format_generators(emit_minors(n, d, i, size)); });
  m.def("parse_generators", [](const std::string& text) { return format_generators(parse_generators(text)); });
  m.def("sample", [](const std::string& family, int n, int d, std::uint64_t seed, int bound) {
    SampleSpec spec;
    parse_family(family, spec);
    spec.n = n;
    spec.d = d;
    spec.seed = seed;
    spec.coeff_bound = bound;
    return form_to_json(sample(spec)).dump();
  });
  m.def("t2s_sequence", [](int d, int s) { return t2s_sequence(d, s).entries; });
  m.def("dim_vr", [](int r, int d, int n) { return to_string(dim_vr(r, d, n)); });
  m.def("en_alternating_sum", [](int d, int s) { return to_string(en_alternating_sum(d, s)); });
  m.def("suite_names", &suite_names);
  m.def("run_suite", &suite_json);
}
