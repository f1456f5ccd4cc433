#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bipos/chartable.hpp"
#include "bipos/cyclo.hpp"
#include "bipos/group.hpp"

namespace bipos {

struct MClass {
  Elem rep;
  ElemSet members;
  ElemSet centralizer;
  std::vector<int> zpos;  // parent element -> position in centralizer, -1 outside
  std::shared_ptr<const CharacterTable> chars;  // values indexed by centralizer position
  std::vector<std::string> char_labels;          // paper-style names
  std::string name;                              // class name, e.g. "g2'"

  // rho(b) for b in Z(rep), b a parent element.
  const Cyclo& value(int chi, Elem b) const { return chars->values[chi][zpos[b]]; }
};

struct MPair {
  int cls;
  int chi;
  friend bool operator==(const MPair&, const MPair&) = default;
};

class MSpace;
using MSpacePtr = std::shared_ptr<const MSpace>;

// M(G): pairs (x, rho) up to conjugacy, with the commuting-pair bookkeeping
// needed by the function model.
class MSpace {
 public:
  static MSpacePtr build(GroupPtr g);
  // Structural product; the group is Group::product of the factor groups.
  static MSpacePtr product(const std::vector<MSpacePtr>& factors);

  const GroupPtr& group() const { return group_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<MClass>& classes() const { return classes_; }
  const MPair& pair(int m) const { return pairs_[m]; }
  int index(int cls, int chi) const { return index_[cls][chi]; }
  int class_of(Elem a) const { return class_of_[a]; }
  // g with g a g^-1 = rep of a's class
  Elem transporter(Elem a) const { return transporter_[a]; }
  const std::vector<MSpacePtr>& factors() const { return factors_; }
  // Products only: pair of the product from one pair index per factor.
  int product_index(const std::vector<int>& parts) const;

  std::string label(int m) const;  // "(g2',e'')"
  std::string class_label(int m) const { return classes_[pairs_[m].cls].name; }
  std::string char_label(int m) const { return classes_[pairs_[m].cls].char_labels[pairs_[m].chi]; }
  // Accepts "(x,rho)"; throws std::invalid_argument for unknown labels.
  int find(const std::string& label) const;
  int find(const std::string& cls, const std::string& chi) const;
  // Pair (x, rho) with x any element and rho given by its values on Z(x).
  // Used to name pairs independently of labels.
  int find_by_values(Elem x, const std::vector<std::pair<Elem, Cyclo>>& values) const;

  // Commuting pairs (a,b), enumerated a-major.
  int num_commuting_pairs() const { return static_cast<int>(cp_offset_.back()); }
  int commuting_pair_id(Elem a, Elem b) const;  // -1 if a, b do not commute
  std::pair<Elem, Elem> commuting_pair(int id) const;

 private:
  MSpace() = default;
  void finish();
  void apply_symmetric_labels();

  GroupPtr group_;
  std::vector<MClass> classes_;
  std::vector<MPair> pairs_;
  std::vector<std::vector<int>> index_;
  std::vector<int> class_of_;
  std::vector<Elem> transporter_;
  std::vector<MSpacePtr> factors_;
  std::map<std::vector<int>, int> product_index_;
  std::vector<std::int64_t> cp_offset_;  // size |G|+1
  std::vector<ElemSet> zlist_;            // centralizer of each element (non-abelian only)
  bool abelian_ = false;
};

// Finitely supported element of C[M(G)].
class MVector {
 public:
  MVector() = default;
  explicit MVector(MSpacePtr s) : space_(std::move(s)) {}
  static MVector unit(MSpacePtr s, int m);
  // "(g2,e)+(1,r)+2(1,1)"; coefficients are integers or n/d.
  static MVector parse(MSpacePtr s, const std::string& text);

  const MSpacePtr& space() const { return space_; }
  const std::map<int, Cyclo>& terms() const { return terms_; }
  Cyclo coeff(int m) const;
  void add(int m, const Cyclo& c);
  bool is_zero() const { return terms_.empty(); }

  MVector operator+(const MVector& o) const;
  MVector operator-(const MVector& o) const;
  MVector operator*(const Cyclo& c) const;
  friend bool operator==(const MVector& a, const MVector& b) { return a.terms_ == b.terms_; }

  std::string str() const;
  // [{x, rho, coeff: [[k,n,d],...]}, ...]
  std::string to_json() const;
  static MVector from_json(MSpacePtr s, const std::string& json);

 private:
  MSpacePtr space_;
  std::map<int, Cyclo> terms_;
};

// Conjugation-invariant function on commuting pairs.
struct PairFunction {
  MSpacePtr space;
  std::vector<Cyclo> values;  // by commuting pair id
  Cyclo at(Elem a, Elem b) const { return values[space->commuting_pair_id(a, b)]; }
  bool is_invariant() const;
};

PairFunction to_pair_function(const MVector& v);
// Throws std::invalid_argument if f is not conjugation invariant.
MVector from_pair_function(const PairFunction& f);

// Non-abelian Fourier transform on C[M(G)]:
//   {(x,s),(y,t)} = 1/(|Z(x)||Z(y)|) sum_{g : x commutes with gyg^-1} s(gyg^-1) conj(t(g^-1 x g)).
class FourierMatrix {
 public:
  static FourierMatrix build(const MSpacePtr& s);
  int size() const { return n_; }
  Cyclo entry(int i, int j) const;
  bool all_rational() const { return rational_; }
  MVector apply(const MVector& v) const;
  // A A* = I, exactly.
  bool is_unitary() const;

 private:
  MSpacePtr space_;
  int n_ = 0;
  bool rational_ = false;
  std::vector<Rational> q_;  // rational storage
  std::vector<Cyclo> c_;     // general storage
};

MVector fourier(const MVector& v);

// s_{G',G''}: inflate v along proj (defined on G'' <= G, kernel G') and induce
// to G, in the commuting-pair function model. model is M of proj.target.
MVector s_map(const MSpacePtr& space, const Hom& proj, const MSpacePtr& model, const MVector& v);

// ((x,rho),(y,tau)) -> ((x,y), rho x tau); the result lives in `target`,
// which must be MSpace::product({u.space(), w.space()}).
MVector external_product(const MSpacePtr& target, const MVector& u, const MVector& w);

}  // namespace bipos
