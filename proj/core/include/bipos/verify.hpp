#pragma once

#include <string>
#include <vector>

#include "bipos/exceptional.hpp"
#include "bipos/mspace.hpp"

namespace bipos {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass
};

Check check_bipositivity(const std::vector<MVector>& basis, const FourierMatrix& A, double tol = 1e-9);

// Unique bijection M(G) -> basis with m in the support of its image.
struct IotaResult {
  Check check;
  std::vector<int> iota;  // pair index -> basis index; empty on failure
};
IotaResult check_iota(const std::vector<MVector>& basis);

// Order on M(G) in which the change of basis is unitriangular over Z.
struct TriangularResult {
  Check check;
  std::vector<int> order;  // pair indices
};
TriangularResult check_triangular(const std::vector<MVector>& basis, const std::vector<int>& iota);

// Exact linear independence (rank modulo a large prime, integer vectors only).
Check check_independent(const std::vector<MVector>& basis);

struct FixedPoint {
  std::string pair;
  bool fixed = false;
};
// Basis elements attached to the cuspidal pairs of S_n (n = 2..5), and
// whether A fixes them.
std::vector<std::string> cuspidal_pairs(int n);
std::vector<FixedPoint> check_fixed_points(const std::vector<MVector>& basis, const std::vector<int>& iota,
                                           const FourierMatrix& A, const std::vector<std::string>& pairs);

struct VerificationReport {
  std::string group;
  std::string variant;
  std::vector<Check> checks;
  std::vector<std::string> iota;   // "pair -> provenance", in triangular order
  std::vector<std::string> order;  // pair labels
  std::vector<FixedPoint> fixed_points;
  bool pass() const;
  std::string to_json() const;
  std::string to_text() const;
};

VerificationReport verify_group(const std::string& descriptor, Variant variant = Variant::Standard,
                                double tol = 1e-9);

// ---- interval and subspace families ------------------------------------------

// Sweeps at one even D: Lemma 2.9 and Props. 2.11, 2.15, 2.17 (both delta),
// the z(B) invariants, B -> <B> injectivity, L -> L^! and |bold F(V)| = 4^{D/2}.
std::vector<Check> check_classical_properties(int d);
// A(indicator of E) = 2^{dim E - n} indicator of E^perp for E in bold F(V), D = 2n.
Check check_indicator_transform(int n);
// The indicator basis of bold F(V) equals beta(V_n) built from the recursion.
Check check_route_equivalence(int n, int delta = 0);

}  // namespace bipos
