#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bipos/mspace.hpp"

namespace bipos::classical {

// Families are enumerated up to this D; property sweeps take smaller caps.
inline constexpr int kMaxD = 16;

struct Interval {
  int a = 1, b = 1;
  int size() const { return b - a + 1; }
  bool odd() const { return size() % 2 == 1; }
  auto operator<=>(const Interval&) const = default;
};

// A finite set of intervals of [1,D], kept sorted.
using IntervalSet = std::vector<Interval>;
IntervalSet normalize(IntervalSet s);
std::string to_string(const IntervalSet& s);  // "{[3,5],[4,4]}"
IntervalSet parse_intervals(const std::string& text);

// xi_i : I_{D-2} -> I_D (D is the target size).
Interval xi_embed(int i, Interval ip, int d);
// t_i : R_{D-2} -> R_D
IntervalSet t_insert(int i, const IntervalSet& bp, int d);

enum class Family { S, SS, SSPrim };
const std::vector<IntervalSet>& enumerate_family(Family kind, int d);
IntervalSet primitive(int d, int k);  // {[1,D],...,[k,D+1-k]}

// ---- the space V ------------------------------------------------------------

// Vectors of V as bit masks, bit i-1 the coordinate on e_i.
using Vec = std::uint32_t;
Vec full_mask(int d);
Vec parity_mask(int d, int delta);  // V^delta
Vec e_interval(const Interval& I);
// (x,y) with (e_i,e_j) = 1 iff |i-j| = 1
int form(Vec x, Vec y);

// Subspace of V in reduced row-echelon form; equality is equality of rows.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(const std::vector<Vec>& vectors);
  const std::vector<Vec>& rows() const { return rows_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  bool contains(Vec v) const;
  std::vector<Vec> elements() const;
  Subspace operator+(const Subspace& o) const;
  auto operator<=>(const Subspace&) const = default;
  std::string str(int d) const;  // rows as 0/1 strings e_1..e_D

 private:
  std::vector<Vec> rows_;  // descending leading bit
};

// {x in ambient : (x, z) = 0 for z in s}
Subspace annihilator(const Subspace& s, Vec ambient);
Subspace perp(const Subspace& s, int d);
Subspace shriek(const Subspace& z, int delta, int d);  // Z in V^delta -> subspace of V^{1-delta}
bool is_isotropic(const Subspace& s);

Subspace span_b(const IntervalSet& b);
// T_i : V' -> V and T_i^delta : V'^delta -> V^delta, V' of size d-2.
Vec t_embed(int i, Vec x, int d);
Vec t_embed_delta(int i, int delta, Vec x, int d);
Subspace t_embed(int i, const Subspace& s, int d);
Subspace t_embed_delta(int i, int delta, const Subspace& s, int d);
int kappa(const Interval& I);  // odd intervals only
std::pair<Subspace, Subspace> delta_split(const Subspace& e, int d);  // (E^0, E^1)

struct LPair {
  Subspace l1, l2;
  auto operator<=>(const LPair&) const = default;
};

const std::vector<Subspace>& family_f(int d);             // F(V)
const std::vector<Subspace>& family_ff(int d);            // bold F(V)
const std::vector<Subspace>& family_c(int d, int delta);  // C(V^delta)
const std::vector<LPair>& family_ctilde(int d, int delta);

// Prop. 2.11
Subspace alpha_map(const LPair& p, int delta, int d);

// ---- z(B), B(k) ---------------------------------------------------------------

struct ZDecomposition {
  IntervalSet z1;            // singletons z'(B)
  IntervalSet z2;            // z''(B)
  std::vector<Interval> seq;  // I_1..I_M in order
  std::vector<int> c;        // c_0 = start of I_1, c_j = |I_j|
};
ZDecomposition z_of(const IntervalSet& b, int d);
IntervalSet b_of_k(const IntervalSet& b, int k, int d);
// Prop. 2.15: inverse of (B,k) -> B(k)
std::pair<IntervalSet, int> lambda_inverse(const IntervalSet& bhat, int d);

// E^perp / E for E = <B> with the images of e_{I_1}..e_{I_M}.
struct QuotientBasis {
  Subspace e, eperp;
  std::vector<Vec> lifts;  // e_{I_a}
};
QuotientBasis quotient_symplectic_basis(const IntervalSet& b, int d);

// The B in S_D with <B> = E, for E in F(V).
const IntervalSet& b_of_subspace(const Subspace& e, int d);

// Prop. 2.17: (L1, L2, eps) -> (L1,L2)(eps), eps the k-th primitive subspace of
// the quotient.
struct FTriple {
  LPair pair;
  int k = 0;
};
std::vector<FTriple> family_ftilde(int d, int delta);
Subspace theta_217(const FTriple& t, int delta, int d);

// Indicator vectors of bold F(V), V of size 2n, in C[M(V_n)].
std::vector<MVector> basis_beta_classical(int n, int delta = 0);
// Pair of M(V_n) attached to v in V under the identification with V^delta.
int pair_of_vector(const MSpace& space, Vec v, int n, int delta);

}  // namespace bipos::classical
