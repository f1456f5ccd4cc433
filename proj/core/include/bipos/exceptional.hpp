#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bipos/group.hpp"
#include "bipos/mspace.hpp"

namespace bipos {

// A standard group from the list (S1..S5, S2xS2, S3xS2, V<m>) with its M-space.
// Instances are cached, so groups compare by pointer.
struct Model {
  std::string name;
  GroupPtr group;
  MSpacePtr space;
};
const Model& model(const std::string& name);
// M-space of a group descriptor ("S4", "V2xS5"); products use the factor models.
MSpacePtr space_for(const std::string& descriptor);

struct Subgroup {
  ElemSet members;
  std::string name;
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

// Distinguished subgroups of S_n (n = 2..5), on the cached S_n.
struct XLattice {
  GroupPtr group;
  std::vector<Subgroup> members;  // largest first
  const Subgroup& at(const std::string& name) const;
  std::optional<std::string> name_of(const ElemSet& s) const;
};
const XLattice& x_lattice(int n);

// A surjection from a subgroup of G onto a standard model.
struct HomEntry {
  Subgroup source;
  std::string target;  // model name
  Hom hom;             // defined on source.members, onto model(target).group
};
std::vector<HomEntry> frak_c(const GroupPtr& g);

std::vector<Subgroup> fc_set(const GroupPtr& g);

struct SubgroupPair {
  Subgroup lower;  // normal in upper
  Subgroup upper;
  std::string quotient;  // model name of upper/lower
  Hom projection;        // upper -> model(quotient).group, kernel lower
  std::string rule;      // "i", "ii" or "iii"
};
std::vector<SubgroupPair> tilde_fc_set(const GroupPtr& g);

struct PrimElement {
  std::string name;  // "1", "L[-1]", "L'[z,z2]", "f2", ...
  MVector vector;    // over model(quotient).space
};
// Prim of a quotient type; extra = true adds the L[z^j] used by the primed variant.
std::vector<PrimElement> prim_set(const std::string& quotient, bool extra = false);
PrimElement prim_element(const std::string& quotient, const std::string& name);

struct YTriple {
  SubgroupPair pair;
  PrimElement xi;
};
std::vector<YTriple> y_set(const GroupPtr& g);

enum class Variant { Standard, Primed };

struct BasisElement {
  std::string provenance;  // "S1 S2S2 L[-1,1]"; products join factors with " x "
  MVector vector;
};
// beta(G). Products are tensor products of the factor bases; G must then be a
// product of S_n / V_n factors.
std::vector<BasisElement> basis_beta(const GroupPtr& g, Variant variant = Variant::Standard);

// Projection of (lower, upper) in X(S_n) onto its standard quotient, from the
// fixed identifications rather than the recursion. Throws for pairs without a
// fixed identification.
SubgroupPair lattice_pair(int n, const std::string& lower, const std::string& upper);

// ---- golden tables ---------------------------------------------------------

struct GoldenRow {
  int n;                    // S_n
  std::string lhs;          // "(g2',e)"
  std::string lower, upper, xi;
  std::optional<std::string> rhs;  // printed expansion, when the table gives one
};
const std::vector<GoldenRow>& golden_rows();
std::vector<GoldenRow> golden_table(int n);
// Raw embedded data file.
const std::string& golden_text();

// s_{lower,upper}(xi) on S_n using lattice_pair.
MVector evaluate_row(const GoldenRow& row);

}  // namespace bipos
