#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "catkit/form.hpp"
#include "catkit/matrix.hpp"

namespace catkit {

/// One output of the splitmix64 generator whose state is `x`: the state is
/// advanced by 0x9E3779B97F4A7C15 and the result finalized with the standard
/// xor-shift-multiply mix.
std::uint64_t splitmix64(std::uint64_t x);

/// Deterministic 64-bit generator (splitmix64).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform integer in [lo, hi] (rejection sampling, no modulo bias).
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

enum class SampleFamily { power, ps, tangent, gor, generic };

struct SampleSpec {
  SampleFamily family = SampleFamily::generic;
  int param = 0;  // r for ps(r), s for gor(s)
  int n = 2;
  int d = 2;
  std::uint64_t seed = 0;
  int coeff_bound = 10;
  /// gor(s) only: scramble the two-variable construction with a random
  /// unimodular substitution.
  bool scramble = true;
};

/// Parses "power", "ps(3)", "ps3", "tangent", "gor(2)", "generic".
void parse_family(const std::string& text, SampleSpec& spec);
std::string family_name(const SampleSpec& spec);

/// Deterministic sample from the family:
///   power    L^d
///   ps(r)    L_1^d + ... + L_r^d, L's pairwise nonproportional
///   tangent  L_1 L_2^(d-1), L's nonproportional
///   gor(s)   G_1 L_1^(d-d_1+1) + G_2 L_2^(d-d_2+1), d_1 + d_2 = s, built in
///            two variables and scrambled by a unimodular substitution, with
///            Hilbert sequence T_{2,s}
///   generic  dense random divided coefficients
/// Coefficients are uniform in [-coeff_bound, coeff_bound].
/// Throws DomainError for impossible specs.
Form sample(const SampleSpec& spec);

// Building blocks shared with the property suites.

/// Random nonzero linear form in n variables.
Vector random_linear(SplitMix64& rng, int n, int bound);
/// n linear forms pairwise nonproportional.
std::vector<Vector> random_distinct_linears(SplitMix64& rng, int count, int n, int bound);
bool proportional(const Vector& a, const Vector& b);
/// Random n x n integer matrix with determinant 1.
ExactMatrix random_unimodular(SplitMix64& rng, int n);
/// Random homogeneous polynomial of the given degree (divided coordinates,
/// entries uniform in [-bound, bound]).
Form random_form(SplitMix64& rng, int n, int d, int bound);
/// The same polynomial viewed in n >= f.n() variables (x_1..x_{f.n()}).
Form embed(const Form& f, int n);

}  // namespace catkit
