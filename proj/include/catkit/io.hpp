#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "catkit/catalecticant.hpp"
#include "catkit/form.hpp"

namespace catkit {

// Form files (JSON):
//   { "n": 3, "d": 4, "basis": "monomial" | "divided",
//     "terms": [ { "exp": [4,0,0], "coeff": "1/2" }, ... ] }
// Coefficients are strings ("p/q" or an integer) or JSON integers. Repeated
// exponents are summed.

Form form_from_json(const nlohmann::json& doc);
nlohmann::json form_to_json(const Form& f, Basis basis = Basis::divided);

Form parse_form(const std::string& text);
Form read_form(const std::filesystem::path& path);

// Generator exports (text): for every block a header line
//   # catkit generators n=<n> d=<d> i=<i> r=<r>
// followed by one expanded polynomial per generator in the symbols
// Z[e1,...,en], e.g. "Z[2,0]*Z[0,2] - Z[1,1]^2". Identically-zero minors are
// written as "0" so line positions match generator indices. A set without
// blocks is the bare header "# catkit generators n=<n> d=<d>".

std::string format_minor(const MinorPolynomial& p);
std::string format_generators(const GeneratorSet& g);
/// Inverse of format_generators; rebuilds the row/column subsets from the
/// deterministic minor order. Throws FormatError on malformed input.
GeneratorSet parse_generators(const std::string& text);

/// Writes format_generators(g); throws Error on I/O failure.
void export_generators(const GeneratorSet& g, const std::filesystem::path& path);
GeneratorSet import_generators(const std::filesystem::path& path);

}  // namespace catkit
