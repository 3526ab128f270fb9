#include "catkit/io.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "catkit/error.hpp"

namespace catkit {
namespace {

using nlohmann::json;

Rational coefficient_from_json(const json& value) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) return parse_rational(value.dump());
  throw FormatError("coefficient must be a string \"p/q\" or an integer");
}

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_number_integer()) {
    throw FormatError(std::string("form file: missing integer field '") + key + "'");
  }
  return doc.at(key).get<int>();
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Recursive-descent reader for one exported polynomial line.
class PolyReader {
 public:
  PolyReader(std::string_view text, const MonomialIndex& symbols, int n)
      : text_(text), symbols_(symbols), n_(n) {}

  MinorPolynomial read(int d, int degree) {
    MinorPolynomial out(n_, d, degree);
    skip_space();
    if (text_.substr(pos_) == "0") return out;
    bool first = true;
    while (true) {
      skip_space();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      skip_space();
      Rational coeff = sign;
      MinorPolynomial::Key key;
      read_term(coeff, key);
      if (static_cast<int>(key.size()) != degree) fail("term degree differs from the block's minor size");
      out.add_term(std::move(key), coeff);
    }
    if (first) fail("empty polynomial");
    return out;
  }

 private:
  void read_term(Rational& coeff, MinorPolynomial::Key& key) {
    while (true) {
      skip_space();
      if (peek() == 'Z') {
        read_symbol(key);
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= read_number();
      } else {
        fail("expected a number or a symbol Z[...]");
      }
      skip_space();
      if (peek() != '*') return;
      ++pos_;
    }
  }

  void read_symbol(MinorPolynomial::Key& key) {
    ++pos_;
    expect('[');
    std::vector<int> exps;
    while (true) {
      skip_space();
      exps.push_back(static_cast<int>(read_natural()));
      skip_space();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(']');
      break;
    }
    if (static_cast<int>(exps.size()) != n_) fail("symbol has the wrong number of exponents");
    int power = 1;
    if (peek() == '^') {
      ++pos_;
      power = static_cast<int>(read_natural());
      if (power < 1) fail("nonpositive power");
    }
    std::size_t position = 0;
    try {
      position = symbols_.position(MultiIndex(exps));
    } catch (const DomainError&) {
      fail("symbol degree differs from d");
    }
    for (int k = 0; k < power; ++k) key.push_back(static_cast<int>(position));
  }

  Rational read_number() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
    return parse_rational(text_.substr(start, pos_ - start));
  }

  unsigned long read_natural() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a natural number");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("generator line '" + std::string(text_) + "': " + what + " at column " +
                      std::to_string(pos_ + 1));
  }

  std::string_view text_;
  const MonomialIndex& symbols_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

Form form_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("form file must be a JSON object");
  const int n = require_int(doc, "n");
  const int d = require_int(doc, "d");
  if (n < 1 || d < 1) throw FormatError("form file: need n >= 1 and d >= 1");
  Basis basis = Basis::divided;
  if (doc.contains("basis")) {
    const auto name = doc.at("basis").get<std::string>();
    if (name == "monomial") {
      basis = Basis::monomial;
    } else if (name != "divided") {
      throw FormatError("form file: basis must be \"monomial\" or \"divided\"");
    }
  }
  if (!doc.contains("terms") || !doc.at("terms").is_array()) {
    throw FormatError("form file: missing array field 'terms'");
  }
  IndexMap<Rational> coeffs;
  for (const auto& term : doc.at("terms")) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff")) {
      throw FormatError("form file: every term needs 'exp' and 'coeff'");
    }
    std::vector<int> exps;
    for (const auto& e : term.at("exp")) {
      if (!e.is_number_integer() || e.get<int>() < 0) throw FormatError("form file: bad exponent");
      exps.push_back(e.get<int>());
    }
    MultiIndex u(std::move(exps));
    if (static_cast<int>(u.size()) != n || u.degree() != d) {
      throw FormatError("form file: exponent " + u.str() + " does not match n and d");
    }
    auto [it, inserted] = coeffs.try_emplace(u, coefficient_from_json(term.at("coeff")));
    if (!inserted) it->second += coefficient_from_json(term.at("coeff"));
  }
  return convert_basis(n, d, coeffs, basis);
}

json form_to_json(const Form& f, Basis basis) {
  json doc;
  doc["n"] = f.n();
  doc["d"] = f.degree();
  doc["basis"] = basis == Basis::monomial ? "monomial" : "divided";
  json terms = json::array();
  const IndexMap<Rational> coeffs = basis == Basis::monomial ? monomial_coefficients(f) : f.coefficients();
  for (const auto& [u, c] : coeffs) terms.push_back({{"exp", u.exponents()}, {"coeff", to_string(c)}});
  doc["terms"] = std::move(terms);
  return doc;
}

Form parse_form(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("form file is not valid JSON: ") + e.what());
  }
  try {
    return form_from_json(doc);
  } catch (const json::exception& e) {
    throw FormatError(std::string("form file: ") + e.what());
  }
}

Form read_form(const std::filesystem::path& path) { return parse_form(slurp(path)); }

std::string format_minor(const MinorPolynomial& p) {
  if (p.is_zero()) return "0";
  const auto symbols = enumerate_monomials(p.n(), p.d());
  std::string out;
  bool first = true;
  for (const auto& [key, c] : p.terms()) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (std::size_t k = 0; k < key.size();) {
      std::size_t run = k;
      while (run < key.size() && key[run] == key[k]) ++run;
      if (!mono.empty()) mono += "*";
      mono += "Z" + symbols[static_cast<std::size_t>(key[k])].str();
      if (run - k > 1) mono += "^" + std::to_string(run - k);
      k = run;
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string format_generators(const GeneratorSet& g) {
  std::string out;
  if (g.blocks.empty()) {
    if (!g.generators.empty()) throw InternalError("generators without a block");
    return "# catkit generators n=" + std::to_string(g.n) + " d=" + std::to_string(g.d) + "\n";
  }
  std::size_t next = 0;
  for (const auto& block : g.blocks) {
    out += "# catkit generators n=" + std::to_string(g.n) + " d=" + std::to_string(g.d) +
           " i=" + std::to_string(block.i) + " r=" + std::to_string(block.size) + "\n";
    const std::size_t count = minor_subsets(g.n, g.d, block.i, block.size).size();
    for (std::size_t k = 0; k < count; ++k, ++next) {
      if (next >= g.generators.size()) throw InternalError("generator set shorter than its blocks");
      out += format_minor(g.generators[next]) + "\n";
    }
  }
  if (next != g.generators.size()) throw InternalError("generator set longer than its blocks");
  return out;
}

GeneratorSet parse_generators(const std::string& text) {
  static const std::regex header(R"(^#\s*catkit generators n=(\d+) d=(\d+)(?: i=(\d+) r=(\d+))?\s*$)");
  std::istringstream in(text);
  std::string line;
  GeneratorSet out;
  bool have_shape = false;
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> pending;
  std::size_t pending_next = 0;
  MinorBlock block;
  std::optional<MonomialIndex> symbols;
  std::size_t line_no = 0;

  auto close_block = [&]() {
    if (have_shape && pending_next != pending.size()) {
      throw FormatError("generator block i=" + std::to_string(block.i) + " r=" + std::to_string(block.size) +
                        " has " + std::to_string(pending_next) + " lines, expected " +
                        std::to_string(pending.size()));
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::smatch m;
    if (std::regex_match(line, m, header)) {
      close_block();
      const int n = std::stoi(m[1]);
      const int d = std::stoi(m[2]);
      if (have_shape && (n != out.n || d != out.d)) throw FormatError("generator blocks over different (n, d)");
      out.n = n;
      out.d = d;
      have_shape = true;
      if (!m[3].matched) {
        pending.clear();
        pending_next = 0;
        continue;
      }
      block = MinorBlock{std::stoi(m[3]), std::stoi(m[4])};
      try {
        pending = minor_subsets(n, d, block.i, block.size);
        if (!symbols) symbols.emplace(n, d);
      } catch (const DomainError& e) {
        throw FormatError("line " + std::to_string(line_no) + ": " + e.what());
      }
      pending_next = 0;
      out.blocks.push_back(block);
      continue;
    }
    if (line.front() == '#') continue;
    if (!have_shape) throw FormatError("generator line before any header");
    if (out.blocks.empty()) throw FormatError("generator line under a header without i and r");
    if (pending_next >= pending.size()) throw FormatError("too many lines in generator block");
    MinorPolynomial p = PolyReader(line, *symbols, out.n).read(out.d, block.size);
    p.block_i = block.i;
    p.row_subset = pending[pending_next].first;
    p.col_subset = pending[pending_next].second;
    ++pending_next;
    out.generators.push_back(std::move(p));
  }
  close_block();
  if (!have_shape) throw FormatError("generator file has no header");
  return out;
}

void export_generators(const GeneratorSet& g, const std::filesystem::path& path) {
  const std::string text = format_generators(g);
  std::ofstream out(path);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write to " + path.string() + " failed");
}

GeneratorSet import_generators(const std::filesystem::path& path) { return parse_generators(slurp(path)); }

}  // namespace catkit
