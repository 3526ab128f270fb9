#include "catkit/sampling.hpp"

#include <limits>
#include <regex>

#include "catkit/apolarity.hpp"
#include "catkit/error.hpp"
#include "catkit/varieties.hpp"

namespace catkit {
namespace {

constexpr int kMaxRetries = 1000;

Form linear_product_power(const Vector& g_linear, const Vector& l, int exponent) {
  return multiply_s(Form::from_vector(static_cast<int>(g_linear.size()), 1, g_linear),
                    linear_power(l, exponent));
}

// Value of a two-variable monomial-basis polynomial at (a, b).
Rational evaluate_binary(const Form& g, const Rational& a, const Rational& b) {
  Rational total = 0;
  for (const auto& [u, c] : monomial_coefficients(g)) {
    Rational term = c;
    for (int k = 0; k < u[0]; ++k) term *= a;
    for (int k = 0; k < u[1]; ++k) term *= b;
    total += term;
  }
  return total;
}

Form sample_gor(SplitMix64& rng, const SampleSpec& spec) {
  const int d = spec.d;
  const int s = spec.param;
  if (spec.n < 2 || s < 2 || 2 * s > d + 2) {
    throw DomainError("gor(s) samples need n >= 2, s >= 2 and 2s <= d+2");
  }
  const SequenceT target = t2s_sequence(d, s);
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    const int d1 = static_cast<int>(rng.uniform(1, s - 1));
    const int d2 = s - d1;
    const auto ls = random_distinct_linears(rng, 2, 2, spec.coeff_bound);
    Form f(2, d);
    bool ok = true;
    for (int k = 0; k < 2 && ok; ++k) {
      const int dk = k == 0 ? d1 : d2;
      const Vector& l = ls[static_cast<std::size_t>(k)];
      const Form g = random_form(rng, 2, dk - 1, spec.coeff_bound);
      // L = p x1 + q x2 vanishes at (q, -p).
      if (sgn(evaluate_binary(g, l[1], -l[0])) == 0) ok = false;
      f += multiply_s(g, linear_power(l, d - dk + 1));
    }
    if (!ok || f.is_zero()) continue;
    Form out = embed(f, spec.n);
    if (spec.scramble) out = substitute(out, random_unimodular(rng, spec.n));
    if (hilbert_sequence(out).entries == target.entries) return out;
  }
  throw DomainError("could not sample a form with Hilbert sequence T_{2,s}");
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::next() {
  const std::uint64_t out = splitmix64(state_);
  state_ += 0x9E3779B97F4A7C15ULL;
  return out;
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return lo + static_cast<std::int64_t>(x % span);
}

void parse_family(const std::string& text, SampleSpec& spec) {
  static const std::regex pattern(R"(^(power|ps|tangent|gor|generic)(?:\(?(\d+)\)?)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw FormatError("unknown family '" + text + "'");
  const std::string kind = m[1];
  const bool has_param = m[2].matched;
  if ((kind == "ps" || kind == "gor") != has_param) {
    throw FormatError("family '" + text + "': ps and gor take a parameter, others none");
  }
  spec.param = has_param ? std::stoi(m[2]) : 0;
  if (kind == "power") spec.family = SampleFamily::power;
  if (kind == "ps") spec.family = SampleFamily::ps;
  if (kind == "tangent") spec.family = SampleFamily::tangent;
  if (kind == "gor") spec.family = SampleFamily::gor;
  if (kind == "generic") spec.family = SampleFamily::generic;
}

std::string family_name(const SampleSpec& spec) {
  switch (spec.family) {
    case SampleFamily::power:
      return "power";
    case SampleFamily::ps:
      return "ps(" + std::to_string(spec.param) + ")";
    case SampleFamily::tangent:
      return "tangent";
    case SampleFamily::gor:
      return "gor(" + std::to_string(spec.param) + ")";
    case SampleFamily::generic:
      return "generic";
  }
  return "?";
}

Vector random_linear(SplitMix64& rng, int n, int bound) {
  if (bound < 1) throw DomainError("coefficient bound must be positive");
  while (true) {
    Vector l(static_cast<std::size_t>(n));
    bool nonzero = false;
    for (auto& c : l) {
      c = rng.uniform(-bound, bound);
      nonzero = nonzero || sgn(c) != 0;
    }
    if (nonzero) return l;
  }
}

bool proportional(const Vector& a, const Vector& b) {
  return rank(ExactMatrix::from_rows({a, b})) < 2;
}

std::vector<Vector> random_distinct_linears(SplitMix64& rng, int count, int n, int bound) {
  if (count > 1 && n < 2) throw DomainError("nonproportional linear forms need n >= 2");
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<Vector> out;
    bool ok = true;
    for (int k = 0; k < count && ok; ++k) {
      Vector l = random_linear(rng, n, bound);
      for (const auto& prev : out) ok = ok && !proportional(prev, l);
      out.push_back(std::move(l));
    }
    if (ok) return out;
  }
  throw DomainError("could not draw pairwise nonproportional linear forms (bound too small?)");
}

ExactMatrix random_unimodular(SplitMix64& rng, int n) {
  ExactMatrix m = ExactMatrix::identity(static_cast<std::size_t>(n));
  if (n < 2) return m;
  for (int step = 0; step < 3 * n; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, n - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, n - 2));
    if (j >= i) ++j;
    const Rational c = rng.uniform(1, 2) * (rng.uniform(0, 1) == 0 ? -1 : 1);
    for (std::size_t col = 0; col < m.cols(); ++col) m(i, col) += c * m(j, col);
  }
  return m;
}

Form random_form(SplitMix64& rng, int n, int d, int bound) {
  Form out(n, d);
  for (const auto& u : enumerate_monomials(n, d)) out.add(u, rng.uniform(-bound, bound));
  return out;
}

Form embed(const Form& f, int n) {
  if (n < f.n()) throw DomainError("embed: target has fewer variables");
  Form out(n, f.degree());
  for (const auto& [u, c] : f.coefficients()) {
    std::vector<int> e = u.exponents();
    e.resize(static_cast<std::size_t>(n), 0);
    out.add(MultiIndex(std::move(e)), c);
  }
  return out;
}

Form sample(const SampleSpec& spec) {
  if (spec.n < 1 || spec.d < 1) throw DomainError("sample needs n >= 1 and d >= 1");
  if (spec.coeff_bound < 1) throw DomainError("coefficient bound must be positive");
  SplitMix64 rng(spec.seed);
  switch (spec.family) {
    case SampleFamily::power:
      return linear_power(random_linear(rng, spec.n, spec.coeff_bound), spec.d);
    case SampleFamily::ps: {
      if (spec.param < 1) throw DomainError("ps(r) needs r >= 1");
      Form f(spec.n, spec.d);
      for (const auto& l : random_distinct_linears(rng, spec.param, spec.n, spec.coeff_bound)) {
        f += linear_power(l, spec.d);
      }
      return f;
    }
    case SampleFamily::tangent: {
      if (spec.d < 2) throw DomainError("tangent samples need d >= 2");
      const auto ls = random_distinct_linears(rng, 2, spec.n, spec.coeff_bound);
      return linear_product_power(ls[0], ls[1], spec.d - 1);
    }
    case SampleFamily::gor:
      return sample_gor(rng, spec);
    case SampleFamily::generic:
      return random_form(rng, spec.n, spec.d, spec.coeff_bound);
  }
  throw DomainError("unknown sample family");
}

}  // namespace catkit
