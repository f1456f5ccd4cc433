#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace bipos {

using Elem = int;                      // index into a group's element list; 0 is the identity
using ElemSet = std::vector<Elem>;     // sorted, duplicate free
using Perm = std::vector<std::uint8_t>;  // 0-based images

// 1-based cycle notation, e.g. perm_from_cycles(5, {{1,2},{3,4}}).
Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles);
std::string perm_cycles(const Perm& p);
// Sorted cycle lengths, longest first (fixed points included).
std::vector<int> cycle_type(const Perm& p);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A finite group with elements 0..order-1 (0 = identity).
//
// Permutation and table groups carry a full multiplication table. F2 spaces
// multiply by xor, with element k the vector of bits of k (bit i-1 is the
// coordinate on xi_i). Products use mixed-radix element codes and multiply
// through the factors.
class Group {
 public:
  enum class Kind { Permutation, F2Space, Product, Table };

  static GroupPtr symmetric(int n);
  static GroupPtr permutation(std::string name, int degree, const std::vector<Perm>& gens);
  static GroupPtr f2space(int n);
  static GroupPtr product(std::vector<GroupPtr> factors);
  // table[a * n + b] = a*b; element 0 must be the identity.
  static GroupPtr from_table(std::string name, std::vector<int> table, std::vector<std::string> names);

  const std::string& name() const { return name_; }
  Kind kind() const { return kind_; }
  int order() const { return n_; }
  Elem identity() const { return 0; }

  Elem mul(Elem a, Elem b) const {
    if (kind_ == Kind::F2Space) return a ^ b;
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * n_ + b];
    return product_mul(a, b);
  }
  Elem inv(Elem a) const { return kind_ == Kind::F2Space ? a : inv_[a]; }
  // g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }
  int elem_order(Elem a) const;
  bool is_abelian() const;
  std::string elem_name(Elem a) const;

  // Permutation groups only.
  int degree() const { return degree_; }
  const Perm& perm(Elem a) const { return perms_.at(a); }
  std::optional<Elem> find_perm(const Perm& p) const;

  // F2 spaces only.
  int f2_dim() const { return f2_dim_; }

  // Products only.
  const std::vector<GroupPtr>& factors() const { return factors_; }
  std::vector<Elem> split(Elem a) const;
  Elem join(const std::vector<Elem>& parts) const;

 private:
  Group() = default;
  Elem product_mul(Elem a, Elem b) const;
  void finish_inverses();

  std::string name_;
  Kind kind_ = Kind::Table;
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<std::string> names_;
  int degree_ = 0;
  std::vector<Perm> perms_;
  int f2_dim_ = 0;
  std::vector<GroupPtr> factors_;
};

// Parse "S1".."S5", "V<n>" (n <= 12) and products joined by 'x', e.g. "S3xS2".
GroupPtr build_standard(const std::string& descriptor);

// ---- subgroups -------------------------------------------------------------

ElemSet generate(const Group& g, const std::vector<Elem>& gens);
bool contains(const ElemSet& s, Elem x);
bool is_subgroup(const Group& g, const ElemSet& h);
// k normal in h (both subgroups of g)
bool is_normal(const Group& g, const ElemSet& k, const ElemSet& h);
ElemSet centralizer(const Group& g, Elem x);
ElemSet intersect(const ElemSet& a, const ElemSet& b);

struct ConjClass {
  Elem rep;
  ElemSet members;
};
// Ordered by class size, then by representative; the representative is the
// smallest element of its class.
std::vector<ConjClass> conjugacy_classes(const Group& g);

// A subgroup re-indexed as a standalone group. Local element 0 is the identity.
struct Embedded {
  GroupPtr group;
  std::vector<Elem> to_parent;
  std::vector<int> from_parent;  // -1 outside the subgroup
};
Embedded as_group(const Group& g, const ElemSet& h, std::string name);

// ---- homomorphisms ---------------------------------------------------------

// A homomorphism defined on a subgroup `domain` of `source`.
struct Hom {
  GroupPtr source;
  ElemSet domain;
  GroupPtr target;
  std::vector<Elem> image;  // indexed by source element; -1 outside domain

  Elem operator()(Elem a) const { return image[a]; }
  bool defined(Elem a) const { return image[a] >= 0; }
  ElemSet kernel() const;
  bool is_surjective() const;
  bool is_injective() const;
  // {x in domain : hom(x) in s}
  ElemSet preimage(const ElemSet& s) const;
};

// Extend gens -> images to a homomorphism on <gens>. nullopt when the
// assignment is not a homomorphism.
std::optional<Hom> hom_from_generators(GroupPtr source, const std::vector<Elem>& gens,
                                       GroupPtr target, const std::vector<Elem>& images);
// outer after inner; outer.source must be inner.target.
Hom compose(const Hom& outer, const Hom& inner);
// Identity on a subgroup viewed as a map into a standalone copy.
Hom restrict_hom(const Hom& h, const ElemSet& subdomain);

// Small generating set (greedy, deterministic).
std::vector<Elem> generators(const Group& g, const ElemSet& h);
std::vector<Elem> generators(const Group& g);

// Isomorphism from model (with generators model_gens) onto the group h, as an
// element map model -> h. Searches generator images up to element order.
std::optional<std::vector<Elem>> find_isomorphism(const Group& model, const std::vector<Elem>& model_gens,
                                                  const Group& h);

// ---- quotients -------------------------------------------------------------

struct Quotient {
  GroupPtr group;        // coset group
  Hom projection;        // outer -> coset group, defined on outer
  std::optional<Hom> standard;  // coset group -> a standard model, when recognised
  std::string standard_name;
};
// k normal in h; identifies the coset group with S1..S5, S2xS2, S3xS2 or V_m.
Quotient quotient(GroupPtr g, const ElemSet& h, const ElemSet& k);

}  // namespace bipos
