#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "catkit/catalecticant.hpp"
#include "catkit/form.hpp"
#include "catkit/matrix.hpp"

namespace catkit {

/// f restricted to its essential variables: rank r = rank Cat_f(1, d-1),
/// an invertible change of coordinates x = M x' whose last n - r columns
/// span the linear forms apolar to f, and g(x'_1..x'_r) = f(M x').
struct EssentialReduction {
  std::size_t rank = 0;
  ExactMatrix change;
  Form reduced{1, 0};
};

EssentialReduction essential_vars(const Form& f);

/// rank Cat_f(1, d-1) <= r.
bool member_vr(const Form& f, std::size_t r);

/// f in PS(2, d; n): rank Cat_f(1, d-1) <= 2 and rank Cat_f(2, d-2) <= 2.
/// Throws DomainError for d < 2.
bool member_ps2(const Form& f);

/// f in Gor_<=(T_{2,s}): rank Cat_f(1, d-1) <= 2 and rank Cat_f(s, d-s) <= s.
/// Throws DomainError unless s >= 2 and 2s <= d+2.
bool member_gor_leq(const Form& f, int s);

enum class Ps2Tag { zero, power, sum_of_two, tangent_line };

/// Normal form of a point of PS(2, d; n):
///   power        f = c_1 L_1^d
///   sum_of_two   f = c_1 L_1^d + c_2 L_2^d
///   tangent_line f = c_1 L_1 L_2^(d-1)
/// `witnesses` holds L_1 (and L_2) in the original variables and `scales`
/// the c's, when they are rational; both are empty otherwise.
struct Ps2Class {
  Ps2Tag tag = Ps2Tag::zero;
  std::vector<Form> witnesses;
  std::vector<Rational> scales;
};

/// Throws DomainError when f is not in PS(2, d; n).
Ps2Class classify_ps2(const Form& f);

const char* to_string(Ps2Tag tag);

/// A symmetric sequence (t_0, ..., t_d) with t_0 = t_d = 1.
struct SequenceT {
  std::vector<std::size_t> entries;
  friend bool operator==(const SequenceT&, const SequenceT&) = default;
};

/// T_{2,s}: entries[i] = min(i+1, s, d-i+1). Needs s >= 2, 2s <= d+2.
SequenceT t2s_sequence(int d, int s);

/// T_r: entries[i] = min(r, C(n-1+i, i), C(n-1+d-i, d-i)).
/// Needs r <= C(n-1+floor(d/2), floor(d/2)).
SequenceT hilbert_cap(std::size_t r, int d, int n);

/// C(r+d-1, d) + r(n-r), the dimension of V_r(1, d-1; n), for 1 <= r <= n-1.
Integer dim_vr(int r, int d, int n);

/// Dimension of Gor_<=(T_{2,s}) in n variables: 2s + 2(n-2). For s = 2 this
/// is dim PS(2, d; n) = 2n.
Integer dim_gor_t2s(int s, int n);

/// Rank of the term Lambda^j A (x) S_{j-e} E* (x) Lambda^e E* of the
/// Eagon-Northcott complex with a = d-s+1, e = s+1: C(a, j) * C(j-1, e-1).
/// Needs e <= j <= a.
Integer en_term_rank(int d, int s, int j);

/// Alternating sum over j = e..a of (-1)^(j-e) en_term_rank(d, s, j).
Integer en_alternating_sum(int d, int s);

/// Families for singular_test: V_r(1, d-1; n), PS(2, d; n), Gor_<=(T_{2,s}).
struct Family {
  enum class Kind { vr, ps2, gor };
  Kind kind = Kind::ps2;
  int param = 0;  // r for vr, s for gor

  static Family vr(int r) { return {Kind::vr, r}; }
  static Family ps2() { return {Kind::ps2, 2}; }
  static Family gor(int s) { return {Kind::gor, s}; }
  std::string name() const;
};

/// The minors that define the family: (r+1)-minors of Cat(1, d-1) for vr(r);
/// 3-minors of Cat(1, d-1) and Cat(2, d-2) for ps2; 3-minors of Cat(1, d-1)
/// and (s+1)-minors of Cat(s, d-s) for gor(s). Blocks whose minors do not
/// fit the matrix are empty and omitted.
GeneratorSet family_generators(const Family& family, int n, int d);

/// Expected dimension of the family's variety in S_d.
Integer family_dimension(const Family& family, int n, int d);

bool family_member(const Family& family, const Form& f);

struct SingularReport {
  std::string family;
  std::size_t ambient_dim = 0;
  std::size_t generator_count = 0;
  std::size_t jacobian_rank = 0;
  std::size_t tangent_dim = 0;
  Integer variety_dim = 0;
  bool singular = false;
};

/// Zariski tangent dimension of the family's scheme at f from the Jacobian of
/// its generators, compared with the variety dimension. Throws DomainError
/// when f is not in the family.
SingularReport singular_test(const Form& f, const Family& family);
SingularReport singular_test(const Form& f, const Family& family, const GeneratorSet& generators);

}  // namespace catkit
