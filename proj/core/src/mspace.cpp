#include "bipos/mspace.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace bipos {

namespace {

bool is_full_symmetric(const Group& g) {
  if (g.kind() != Group::Kind::Permutation || g.degree() > 5) return false;
  int fact = 1;
  for (int i = 2; i <= g.degree(); ++i) fact *= i;
  return g.order() == fact;
}

std::vector<int> moved_type(const Perm& p) {
  auto t = cycle_type(p);
  t.erase(std::remove(t.begin(), t.end(), 1), t.end());
  return t;
}

// Exponent k with c == exp(2 pi i k / m), or -1.
int root_index(const Cyclo& c, int m) {
  for (int k = 0; k < m; ++k)
    if (c == Cyclo::root_of_unity(m, k)) return k;
  return -1;
}

int sign_of(const Cyclo& c) {
  if (c == Cyclo(1)) return 1;
  if (c == Cyclo(-1)) return -1;
  return 0;
}

}  // namespace

MSpacePtr MSpace::build(GroupPtr g) {
  if (g->kind() == Group::Kind::Product) {
    std::vector<MSpacePtr> fs;
    for (const auto& f : g->factors()) fs.push_back(build(f));
    return product(fs);
  }
  auto ms = std::shared_ptr<MSpace>(new MSpace());
  ms->group_ = g;
  ms->abelian_ = g->is_abelian();
  int n = g->order();
  std::shared_ptr<const CharacterTable> shared;
  if (g->kind() == Group::Kind::F2Space) shared = std::make_shared<CharacterTable>(character_table(*g));
  ElemSet everything(n);
  std::iota(everything.begin(), everything.end(), 0);
  for (auto& c : conjugacy_classes(*g)) {
    MClass mc;
    mc.rep = c.rep;
    mc.members = std::move(c.members);
    mc.centralizer = ms->abelian_ ? everything : centralizer(*g, mc.rep);
    mc.zpos.assign(n, -1);
    for (std::size_t i = 0; i < mc.centralizer.size(); ++i) mc.zpos[mc.centralizer[i]] = static_cast<int>(i);
    if (shared) {
      mc.chars = shared;
    } else {
      auto emb = as_group(*g, mc.centralizer, "Z(" + g->elem_name(mc.rep) + ")");
      mc.chars = std::make_shared<CharacterTable>(character_table(*emb.group));
    }
    mc.char_labels = mc.chars->labels;
    mc.name = g->elem_name(mc.rep);
    if (g->kind() == Group::Kind::F2Space) {
      // Character chi_w is named by the basis vectors it sends to -1.
      for (int w = 0; w < n; ++w) {
        std::string s;
        for (int i = 0; i < g->f2_dim(); ++i)
          if (w >> i & 1) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
        mc.char_labels[w] = s.empty() ? "1" : "[" + s + "]";
      }
    }
    ms->classes_.push_back(std::move(mc));
  }
  ms->class_of_.assign(n, -1);
  ms->transporter_.assign(n, -1);
  for (int ci = 0; ci < static_cast<int>(ms->classes_.size()); ++ci) {
    const auto& mc = ms->classes_[ci];
    for (Elem a : mc.members) ms->class_of_[a] = ci;
    if (ms->abelian_) {
      ms->transporter_[mc.rep] = 0;
      continue;
    }
    for (Elem x = 0; x < n; ++x) {
      Elem a = g->conj(g->inv(x), mc.rep);  // x a x^-1 = rep
      if (ms->transporter_[a] < 0) ms->transporter_[a] = x;
    }
  }
  if (is_full_symmetric(*g)) ms->apply_symmetric_labels();
  ms->finish();
  return ms;
}

// Paper-style names in M(S_n), n <= 5. Each label is read off the character
// values at fixed elements of the centralizer, so it does not depend on how
// the character table was produced.
void MSpace::apply_symmetric_labels() {
  const Group& g = *group_;
  for (auto& mc : classes_) {
    auto t = moved_type(g.perm(mc.rep));
    const Elem x = mc.rep;
    auto find_in_z = [&](auto pred) -> Elem {
      for (Elem z : mc.centralizer)
        if (pred(z)) return z;
      return -1;
    };
    auto is_type = [&](Elem z, std::vector<int> want) { return moved_type(g.perm(z)) == want; };
    auto power = [&](Elem a, int k) {
      Elem r = 0;
      for (int i = 0; i < k; ++i) r = g.mul(r, a);
      return r;
    };
    const int nchars = mc.chars->size();
    std::vector<std::string> lab(nchars);
    for (int chi = 0; chi < nchars; ++chi) {
      auto val = [&](Elem z) { return mc.value(chi, z); };
      Rational dim = val(0).to_rational();
      std::string l;
      if (t.empty()) {
        l = mc.chars->labels[chi];
      } else if (t == std::vector<int>{2}) {
        int s = sign_of(val(x) / Cyclo(dim));
        Elem y = find_in_z([&](Elem z) { return z != x && is_type(z, {2}); });
        if (y < 0) {
          l = s == 1 ? "1" : "e";
        } else if (g.degree() == 4) {
          int a = sign_of(val(x)), b = sign_of(val(y));
          l = a == 1 ? (b == 1 ? "1" : "e''") : (b == 1 ? "e'" : "e");
        } else {
          std::string base = dim == Rational(2) ? "r" : (sign_of(val(y)) == 1 ? "1" : "e");
          l = s == 1 ? base : "-" + base;
        }
      } else if (t == std::vector<int>{2, 2}) {
        if (dim == Rational(2)) {
          l = "r";
        } else {
          Elem tr = find_in_z([&](Elem z) { return is_type(z, {2}); });
          Elem dd = find_in_z([&](Elem z) { return z != x && is_type(z, {2, 2}); });
          int a = sign_of(val(tr)), c = sign_of(val(dd));
          l = a == 1 ? (c == 1 ? "1" : "e''") : (c == 1 ? "e'" : "e");
        }
      } else if (t == std::vector<int>{3}) {
        int k = root_index(val(x), 3);
        Elem tr = find_in_z([&](Elem z) { return is_type(z, {2}); });
        bool neg = tr >= 0 && sign_of(val(tr)) == -1;
        static const char* pos[] = {"1", "th", "th2"};
        static const char* negs[] = {"e", "eth", "eth2"};
        l = neg ? negs[k] : pos[k];
      } else if (t == std::vector<int>{4}) {
        static const char* n4[] = {"1", "i", "-1", "-i"};
        l = n4[root_index(val(x), 4)];
      } else if (t == std::vector<int>{5}) {
        static const char* n5[] = {"1", "z", "z2", "z3", "z4"};
        l = n5[root_index(val(x), 5)];
      } else if (t == std::vector<int>{3, 2}) {
        int k = root_index(val(power(x, 4)), 3);
        int s = sign_of(val(power(x, 3)));
        static const char* pos[] = {"1", "th", "th2"};
        static const char* negs[] = {"-1", "-th", "-th2"};
        l = s == 1 ? pos[k] : negs[k];
      }
      lab[chi] = l;
    }
    mc.char_labels = lab;
    if (t.empty()) mc.name = "1";
    else if (t == std::vector<int>{2}) mc.name = "g2";
    else if (t == std::vector<int>{2, 2}) mc.name = "g2'";
    else if (t == std::vector<int>{3}) mc.name = "g3";
    else if (t == std::vector<int>{4}) mc.name = "g4";
    else if (t == std::vector<int>{5}) mc.name = "g5";
    else if (t == std::vector<int>{3, 2}) mc.name = "g6";
  }
}

MSpacePtr MSpace::product(const std::vector<MSpacePtr>& factors) {
  if (factors.empty()) throw std::invalid_argument("MSpace::product: no factors");
  std::vector<GroupPtr> groups;
  for (const auto& f : factors) groups.push_back(f->group());
  auto g = Group::product(groups);
  auto ms = std::shared_ptr<MSpace>(new MSpace());
  ms->group_ = g;
  ms->factors_ = factors;
  ms->abelian_ = g->is_abelian();
  const int n = g->order();
  const std::size_t k = factors.size();

  // Cartesian product of factor classes.
  std::vector<std::vector<int>> class_tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<int>> next;
    for (const auto& t : class_tuples)
      for (int c = 0; c < static_cast<int>(f->classes().size()); ++c) {
        auto u = t;
        u.push_back(c);
        next.push_back(u);
      }
    class_tuples = std::move(next);
  }
  struct Built {
    MClass mc;
    std::vector<int> tuple;
  };
  std::vector<Built> built;
  for (const auto& tup : class_tuples) {
    MClass mc;
    std::vector<Elem> rep(k);
    std::vector<const MClass*> fc(k);
    for (std::size_t i = 0; i < k; ++i) {
      fc[i] = &factors[i]->classes()[tup[i]];
      rep[i] = fc[i]->rep;
    }
    mc.rep = g->join(rep);
    // members and centralizer: cartesian products
    std::vector<ElemSet> mem{{}}, cen{{}};
    auto cart = [&](auto getter) {
      std::vector<std::vector<Elem>> acc{{}};
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<std::vector<Elem>> next;
        for (const auto& a : acc)
          for (Elem e : getter(i)) {
            auto b = a;
            b.push_back(e);
            next.push_back(b);
          }
        acc = std::move(next);
      }
      ElemSet out;
      for (const auto& a : acc) out.push_back(g->join(a));
      std::sort(out.begin(), out.end());
      return out;
    };
    mc.members = cart([&](std::size_t i) -> const ElemSet& { return fc[i]->members; });
    mc.centralizer = cart([&](std::size_t i) -> const ElemSet& { return fc[i]->centralizer; });
    mc.zpos.assign(n, -1);
    for (std::size_t i = 0; i < mc.centralizer.size(); ++i) mc.zpos[mc.centralizer[i]] = static_cast<int>(i);
    // characters: products over all factor characters
    auto table = std::make_shared<CharacterTable>();
    std::vector<std::vector<int>> char_tuples{{}};
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::vector<int>> next;
      for (const auto& t : char_tuples)
        for (int c = 0; c < fc[i]->chars->size(); ++c) {
          auto u = t;
          u.push_back(c);
          next.push_back(u);
        }
      char_tuples = std::move(next);
    }
    for (const auto& ct : char_tuples) {
      std::vector<Cyclo> vals(mc.centralizer.size());
      for (std::size_t p = 0; p < mc.centralizer.size(); ++p) {
        auto parts = g->split(mc.centralizer[p]);
        Cyclo v(1);
        for (std::size_t i = 0; i < k; ++i) v *= fc[i]->value(ct[i], parts[i]);
        vals[p] = v;
      }
      table->values.push_back(std::move(vals));
      std::string lab, name;
      for (std::size_t i = 0; i < k; ++i) lab += (i ? "*" : "") + fc[i]->char_labels[ct[i]];
      table->labels.push_back(lab);
    }
    table->recognized_as = "product";
    mc.chars = table;
    mc.char_labels = table->labels;
    mc.name = "(";
    for (std::size_t i = 0; i < k; ++i) mc.name += (i ? "," : "") + fc[i]->name;
    mc.name += ")";
    built.push_back({std::move(mc), tup});
  }
  std::stable_sort(built.begin(), built.end(), [](const Built& a, const Built& b) {
    if (a.mc.members.size() != b.mc.members.size()) return a.mc.members.size() < b.mc.members.size();
    return a.mc.rep < b.mc.rep;
  });
  ms->class_of_.assign(n, -1);
  ms->transporter_.assign(n, -1);
  for (int ci = 0; ci < static_cast<int>(built.size()); ++ci) {
    for (Elem a : built[ci].mc.members) {
      ms->class_of_[a] = ci;
      auto parts = g->split(a);
      for (std::size_t i = 0; i < k; ++i) parts[i] = factors[i]->transporter(parts[i]);
      ms->transporter_[a] = g->join(parts);
    }
    ms->classes_.push_back(built[ci].mc);
  }
  ms->finish();
  // Map factor pair tuples to product pairs.
  for (int m = 0; m < ms->size(); ++m) {
    const auto& p = ms->pairs_[m];
    const auto& tup = built[p.cls].tuple;
    // decode chi into per-factor chi (row-major in factor order)
    std::vector<int> chis(k);
    int chi = p.chi;
    for (std::size_t i = k; i-- > 0;) {
      int nc = factors[i]->classes()[tup[i]].chars->size();
      chis[i] = chi % nc;
      chi /= nc;
    }
    std::vector<int> parts(k);
    for (std::size_t i = 0; i < k; ++i) parts[i] = factors[i]->index(tup[i], chis[i]);
    ms->product_index_[parts] = m;
  }
  return ms;
}

void MSpace::finish() {
  index_.assign(classes_.size(), {});
  pairs_.clear();
  for (int ci = 0; ci < static_cast<int>(classes_.size()); ++ci) {
    const auto& mc = classes_[ci];
    std::vector<int> order(mc.chars->size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return mc.char_labels[a] < mc.char_labels[b]; });
    index_[ci].assign(order.size(), -1);
    for (int chi : order) {
      index_[ci][chi] = static_cast<int>(pairs_.size());
      pairs_.push_back({ci, chi});
    }
  }
  const int n = group_->order();
  cp_offset_.assign(n + 1, 0);
  if (abelian_) {
    for (int a = 0; a <= n; ++a) cp_offset_[a] = static_cast<std::int64_t>(a) * n;
    return;
  }
  zlist_.assign(n, {});
  for (Elem a = 0; a < n; ++a) {
    const auto& mc = classes_[class_of_[a]];
    Elem t = transporter_[a];  // t a t^-1 = rep, so Z(a) = t^-1 Z(rep) t
    Elem ti = group_->inv(t);
    for (Elem z : mc.centralizer) zlist_[a].push_back(group_->conj(ti, z));
    std::sort(zlist_[a].begin(), zlist_[a].end());
    cp_offset_[a + 1] = cp_offset_[a] + static_cast<std::int64_t>(zlist_[a].size());
  }
}

int MSpace::product_index(const std::vector<int>& parts) const {
  auto it = product_index_.find(parts);
  if (it == product_index_.end()) throw std::invalid_argument("product_index: not a product pair");
  return it->second;
}

std::string MSpace::label(int m) const { return "(" + class_label(m) + "," + char_label(m) + ")"; }

int MSpace::find(const std::string& cls, const std::string& chi) const {
  for (int m = 0; m < size(); ++m)
    if (class_label(m) == cls && char_label(m) == chi) return m;
  throw std::invalid_argument("unknown pair (" + cls + "," + chi + ") in M(" + group_->name() + ")");
}

int MSpace::find(const std::string& label) const {
  for (int m = 0; m < size(); ++m)
    if (this->label(m) == label) return m;
  throw std::invalid_argument("unknown pair " + label + " in M(" + group_->name() + ")");
}

int MSpace::find_by_values(Elem x, const std::vector<std::pair<Elem, Cyclo>>& values) const {
  int ci = class_of_[x];
  Elem t = transporter_[x];
  const auto& mc = classes_[ci];
  for (int chi = 0; chi < mc.chars->size(); ++chi) {
    bool ok = true;
    for (const auto& [b, v] : values) {
      Elem bb = group_->conj(t, b);
      if (mc.zpos[bb] < 0 || mc.value(chi, bb) != v) {
        ok = false;
        break;
      }
    }
    if (ok) return index(ci, chi);
  }
  throw std::invalid_argument("find_by_values: no matching character");
}

int MSpace::commuting_pair_id(Elem a, Elem b) const {
  if (abelian_) return static_cast<int>(cp_offset_[a] + b);
  const auto& z = zlist_[a];
  auto it = std::lower_bound(z.begin(), z.end(), b);
  if (it == z.end() || *it != b) return -1;
  return static_cast<int>(cp_offset_[a] + (it - z.begin()));
}

std::pair<Elem, Elem> MSpace::commuting_pair(int id) const {
  auto it = std::upper_bound(cp_offset_.begin(), cp_offset_.end(), static_cast<std::int64_t>(id));
  Elem a = static_cast<Elem>(it - cp_offset_.begin()) - 1;
  std::int64_t off = id - cp_offset_[a];
  if (abelian_) return {a, static_cast<Elem>(off)};
  return {a, zlist_[a][off]};
}

// ---- MVector -----------------------------------------------------------------

MVector MVector::unit(MSpacePtr s, int m) {
  MVector v(std::move(s));
  v.add(m, Cyclo(1));
  return v;
}

Cyclo MVector::coeff(int m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Cyclo() : it->second;
}

void MVector::add(int m, const Cyclo& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MVector MVector::operator+(const MVector& o) const {
  MVector r = *this;
  if (!r.space_) r.space_ = o.space_;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

MVector MVector::operator-(const MVector& o) const { return *this + o * Cyclo(-1); }

MVector MVector::operator*(const Cyclo& c) const {
  MVector r(space_);
  for (const auto& [m, x] : terms_) r.add(m, x * c);
  return r;
}

std::string MVector::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string coef;
    bool neg = false;
    if (c.is_rational()) {
      Rational r = c.to_rational();
      neg = r < Rational(0);
      Rational a = neg ? -r : r;
      if (a != Rational(1)) coef = a.str();
    } else {
      coef = "[" + c.str() + "]";
    }
    if (s.empty()) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    s += coef + space_->label(m);
  }
  return s;
}

MVector MVector::parse(MSpacePtr s, const std::string& text) {
  MVector v(s);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i) == "0") return v;
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    std::string coef;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) coef += text[i++];
    skip();
    if (i >= text.size() || text[i] != '(') throw std::invalid_argument("MVector::parse: expected '(' in " + text);
    int depth = 0;
    std::size_t start = i;
    for (; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')' && --depth == 0) break;
    }
    if (i >= text.size()) throw std::invalid_argument("MVector::parse: unbalanced parentheses in " + text);
    std::string lab = text.substr(start, i - start + 1);
    ++i;
    Rational c(1);
    if (!coef.empty()) {
      auto slash = coef.find('/');
      c = slash == std::string::npos ? Rational(std::stoll(coef))
                                     : Rational(std::stoll(coef.substr(0, slash)), std::stoll(coef.substr(slash + 1)));
    }
    v.add(s->find(lab), Cyclo(c * Rational(sign)));
    skip();
  }
  return v;
}

std::string MVector::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : terms_) {
    nlohmann::json coeff = nlohmann::json::array();
    for (auto [k, n, d] : c.triples()) coeff.push_back({k, n, d});
    out.push_back({{"x", space_->class_label(m)}, {"rho", space_->char_label(m)}, {"coeff", coeff}});
  }
  return out.dump();
}

MVector MVector::from_json(MSpacePtr s, const std::string& text) {
  auto j = nlohmann::json::parse(text);
  MVector v(s);
  for (const auto& t : j) {
    std::vector<std::tuple<int, std::int64_t, std::int64_t>> tr;
    for (const auto& e : t.at("coeff")) tr.emplace_back(e.at(0).get<int>(), e.at(1).get<std::int64_t>(), e.at(2).get<std::int64_t>());
    v.add(s->find(t.at("x").get<std::string>(), t.at("rho").get<std::string>()), Cyclo::from_triples(tr));
  }
  return v;
}

// ---- pair functions ----------------------------------------------------------

bool PairFunction::is_invariant() const {
  const Group& g = *space->group();
  for (Elem s : generators(g))
    for (int id = 0; id < space->num_commuting_pairs(); ++id) {
      auto [a, b] = space->commuting_pair(id);
      if (values[id] != at(g.conj(s, a), g.conj(s, b))) return false;
    }
  return true;
}

PairFunction to_pair_function(const MVector& v) {
  const MSpace& ms = *v.space();
  const Group& g = *ms.group();
  PairFunction f{v.space(), std::vector<Cyclo>(ms.num_commuting_pairs())};
  std::vector<std::vector<std::pair<int, Cyclo>>> by_class(ms.classes().size());
  for (const auto& [m, c] : v.terms()) by_class[ms.pair(m).cls].push_back({ms.pair(m).chi, c});
  for (int id = 0; id < ms.num_commuting_pairs(); ++id) {
    auto [a, b] = ms.commuting_pair(id);
    int ci = ms.class_of(a);
    if (by_class[ci].empty()) continue;
    Elem bb = g.conj(ms.transporter(a), b);
    Cyclo s;
    for (const auto& [chi, c] : by_class[ci]) s += c * ms.classes()[ci].value(chi, bb);
    f.values[id] = s;
  }
  return f;
}

namespace {

// Expand F(rep, .) on Z(rep) in the irreducible characters of every class.
MVector expand_at_reps(const MSpacePtr& space, const std::vector<std::vector<Cyclo>>& at_rep) {
  MVector v(space);
  for (int ci = 0; ci < static_cast<int>(space->classes().size()); ++ci) {
    const auto& mc = space->classes()[ci];
    const auto& vals = at_rep[ci];
    if (std::all_of(vals.begin(), vals.end(), [](const Cyclo& c) { return c.is_zero(); })) continue;
    Cyclo inv_z(Rational(1, static_cast<std::int64_t>(mc.centralizer.size())));
    for (int chi = 0; chi < mc.chars->size(); ++chi) {
      Cyclo s;
      for (std::size_t p = 0; p < mc.centralizer.size(); ++p)
        if (!vals[p].is_zero()) s += vals[p] * mc.chars->values[chi][p].conj();
      v.add(space->index(ci, chi), s * inv_z);
    }
  }
  return v;
}

}  // namespace

MVector from_pair_function(const PairFunction& f) {
  if (!f.is_invariant()) throw std::invalid_argument("from_pair_function: function is not conjugation invariant");
  const MSpace& ms = *f.space;
  std::vector<std::vector<Cyclo>> at_rep(ms.classes().size());
  for (std::size_t ci = 0; ci < ms.classes().size(); ++ci) {
    const auto& mc = ms.classes()[ci];
    for (Elem b : mc.centralizer) at_rep[ci].push_back(f.at(mc.rep, b));
  }
  return expand_at_reps(f.space, at_rep);
}

// ---- Fourier -----------------------------------------------------------------

FourierMatrix FourierMatrix::build(const MSpacePtr& s) {
  const MSpace& ms = *s;
  const Group& g = *ms.group();
  FourierMatrix A;
  A.space_ = s;
  A.n_ = ms.size();
  const std::size_t nn = static_cast<std::size_t>(A.n_) * A.n_;
  const auto& cls = ms.classes();
  if (g.kind() == Group::Kind::F2Space) {
    // Abelian with +-1 characters: {(x,s),(y,t)} = s(y) t(x) / |G|.
    A.rational_ = true;
    A.q_.resize(nn);
    Rational unit(1, g.order());
    for (int i = 0; i < A.n_; ++i) {
      const auto& pi = ms.pair(i);
      Elem x = cls[pi.cls].rep;
      for (int j = 0; j < A.n_; ++j) {
        const auto& pj = ms.pair(j);
        Elem y = cls[pj.cls].rep;
        int sgn = (__builtin_popcount(pi.chi & y) + __builtin_popcount(pj.chi & x)) % 2;
        A.q_[static_cast<std::size_t>(i) * A.n_ + j] = sgn ? -unit : unit;
      }
    }
    return A;
  }
  A.c_.assign(nn, Cyclo());
  for (std::size_t ci = 0; ci < cls.size(); ++ci)
    for (std::size_t ck = 0; ck < cls.size(); ++ck) {
      Elem x = cls[ci].rep, y = cls[ck].rep;
      // Multiplicity of each (g y g^-1, g^-1 x g) over admissible g.
      std::map<std::pair<Elem, Elem>, std::int64_t> count;
      for (Elem h = 0; h < g.order(); ++h) {
        Elem yy = g.conj(h, y);
        if (!g.commute(x, yy)) continue;
        ++count[{yy, g.conj(g.inv(h), x)}];
      }
      Rational scale(1, static_cast<std::int64_t>(cls[ci].centralizer.size() * cls[ck].centralizer.size()));
      for (int s1 = 0; s1 < cls[ci].chars->size(); ++s1)
        for (int t1 = 0; t1 < cls[ck].chars->size(); ++t1) {
          Cyclo acc;
          for (const auto& [pr, c] : count)
            acc += Cyclo(c) * cls[ci].value(s1, pr.first) * cls[ck].value(t1, pr.second).conj();
          A.c_[static_cast<std::size_t>(ms.index(ci, s1)) * A.n_ + ms.index(ck, t1)] = acc * Cyclo(scale);
        }
    }
  A.rational_ = std::all_of(A.c_.begin(), A.c_.end(), [](const Cyclo& c) { return c.is_rational(); });
  if (A.rational_) {
    A.q_.resize(nn);
    for (std::size_t i = 0; i < nn; ++i) A.q_[i] = A.c_[i].to_rational();
    A.c_.clear();
  }
  return A;
}

Cyclo FourierMatrix::entry(int i, int j) const {
  std::size_t k = static_cast<std::size_t>(i) * n_ + j;
  return rational_ ? Cyclo(q_[k]) : c_[k];
}

namespace {

// A on M(V_n) is a two-dimensional Walsh-Hadamard transform:
// A(v)(x,s) = 2^-n sum_{y,t} (-1)^{s.y + t.x} v(y,t).
MVector apply_f2(const MSpacePtr& space, const MVector& v) {
  const MSpace& ms = *space;
  const int n = ms.group()->order();
  std::int64_t den = 1;
  for (const auto& [m, c] : v.terms()) den = detail::lcm(den, c.to_rational().den());
  std::vector<std::int64_t> a(static_cast<std::size_t>(n) * n, 0);  // a[s * n + x]
  for (const auto& [m, c] : v.terms()) {
    const auto& p = ms.pair(m);
    Rational r = c.to_rational();
    a[static_cast<std::size_t>(p.chi) * n + ms.classes()[p.cls].rep] = r.num() * (den / r.den());
  }
  // rows: transform y -> s inside each t-row, then t -> x across rows
  for (int t = 0; t < n; ++t) {
    std::int64_t* row = &a[static_cast<std::size_t>(t) * n];
    for (int h = 1; h < n; h <<= 1)
      for (int i = 0; i < n; i += 2 * h)
        for (int j = i; j < i + h; ++j) {
          std::int64_t u = row[j], w = row[j + h];
          row[j] = u + w;
          row[j + h] = u - w;
        }
  }
  for (int h = 1; h < n; h <<= 1)
    for (int i = 0; i < n; i += 2 * h)
      for (int j = i; j < i + h; ++j)
        for (int s = 0; s < n; ++s) {
          std::int64_t& u = a[static_cast<std::size_t>(j) * n + s];
          std::int64_t& w = a[static_cast<std::size_t>(j + h) * n + s];
          std::int64_t uu = u, ww = w;
          u = uu + ww;
          w = uu - ww;
        }
  // a[x * n + s] now holds n * den * A(v)(x, s)
  MVector out(space);
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < n; ++s) {
      std::int64_t val = a[static_cast<std::size_t>(x) * n + s];
      if (val) out.add(ms.index(ms.class_of(x), s), Cyclo(Rational(val, den * n)));
    }
  return out;
}

}  // namespace

MVector FourierMatrix::apply(const MVector& v) const {
  bool rational_in = std::all_of(v.terms().begin(), v.terms().end(),
                                 [](const auto& t) { return t.second.is_rational(); });
  if (rational_in && space_->group()->kind() == Group::Kind::F2Space) return apply_f2(space_, v);
  MVector out(space_);
  for (int i = 0; i < n_; ++i) {
    if (rational_ && rational_in) {
      Rational s(0);
      for (const auto& [j, c] : v.terms()) s += q_[static_cast<std::size_t>(i) * n_ + j] * c.to_rational();
      out.add(i, Cyclo(s));
    } else {
      Cyclo s;
      for (const auto& [j, c] : v.terms()) s += entry(i, j) * c;
      out.add(i, s);
    }
  }
  return out;
}

bool FourierMatrix::is_unitary() const {
  if (rational_) {
    std::int64_t d = 1;
    for (const auto& q : q_) d = detail::lcm(d, q.den());
    std::vector<std::int64_t> num(q_.size());
    for (std::size_t k = 0; k < q_.size(); ++k) num[k] = q_[k].num() * (d / q_[k].den());
    const __int128 d2 = static_cast<__int128>(d) * d;
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) {
        __int128 s = 0;
        const std::int64_t* a = &num[static_cast<std::size_t>(i) * n_];
        const std::int64_t* b = &num[static_cast<std::size_t>(j) * n_];
        for (int k = 0; k < n_; ++k) s += static_cast<__int128>(a[k]) * b[k];
        if (s != (i == j ? d2 : 0)) return false;
      }
    return true;
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j) {
      Cyclo s;
      for (int k = 0; k < n_; ++k) s += entry(i, k) * entry(j, k).conj();
      if (s != Cyclo(i == j ? 1 : 0)) return false;
    }
  return true;
}

MVector fourier(const MVector& v) { return FourierMatrix::build(v.space()).apply(v); }

// ---- s-map -------------------------------------------------------------------

MVector s_map(const MSpacePtr& space, const Hom& proj, const MSpacePtr& model, const MVector& v) {
  const Group& g = *space->group();
  if (proj.source.get() != space->group().get() && proj.source->order() != g.order())
    throw std::invalid_argument("s_map: projection is not defined on this group");
  if (proj.target.get() != model->group().get())
    throw std::invalid_argument("s_map: model space does not match the projection target");
  const ElemSet& upper = proj.domain;
  if (!is_normal(g, proj.kernel(), upper)) throw std::invalid_argument("s_map: kernel is not normal in the domain");
  PairFunction fq = to_pair_function(v);
  std::vector<char> in(g.order(), 0);
  for (Elem a : upper) in[a] = 1;
  const Cyclo inv(Rational(1, static_cast<std::int64_t>(upper.size())));
  std::vector<std::vector<Cyclo>> at_rep(space->classes().size());
  for (std::size_t ci = 0; ci < space->classes().size(); ++ci) {
    const auto& mc = space->classes()[ci];
    at_rep[ci].assign(mc.centralizer.size(), Cyclo());
    for (Elem h = 0; h < g.order(); ++h) {
      Elem a = g.conj(h, mc.rep);
      if (!in[a]) continue;
      Elem pa = proj(a);
      for (std::size_t p = 0; p < mc.centralizer.size(); ++p) {
        Elem b = g.conj(h, mc.centralizer[p]);
        if (!in[b]) continue;
        const Cyclo& val = fq.at(pa, proj(b));
        if (!val.is_zero()) at_rep[ci][p] += val;
      }
    }
    for (auto& c : at_rep[ci]) c *= inv;
  }
  return expand_at_reps(space, at_rep);
}

MVector external_product(const MSpacePtr& target, const MVector& u, const MVector& w) {
  if (target->factors().size() != 2 || target->factors()[0].get() != u.space().get() ||
      target->factors()[1].get() != w.space().get())
    throw std::invalid_argument("external_product: target is not the product of the operand spaces");
  MVector out(target);
  for (const auto& [a, ca] : u.terms())
    for (const auto& [b, cb] : w.terms()) out.add(target->product_index({a, b}), ca * cb);
  return out;
}

}  // namespace bipos
