#include "bipos/exceptional.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace bipos {

extern const char* const kGoldenData;

namespace {

Elem find_cycles(const Group& g, std::vector<std::vector<int>> cycles) {
  auto e = g.find_perm(perm_from_cycles(g.degree(), cycles));
  if (!e) throw std::logic_error("permutation not in group");
  return *e;
}

ElemSet all_of(const Group& g) {
  ElemSet s(g.order());
  for (int i = 0; i < g.order(); ++i) s[i] = i;
  return s;
}

// Checked homomorphism from an explicit element map.
Hom make_hom(const GroupPtr& src, const ElemSet& dom, const GroupPtr& tgt, const std::function<Elem(Elem)>& f) {
  Hom h{src, dom, tgt, std::vector<Elem>(src->order(), -1)};
  for (Elem a : dom) h.image[a] = f(a);
  for (Elem a : generators(*src, dom))
    for (Elem b : dom)
      if (h(src->mul(a, b)) != tgt->mul(h(a), h(b)))
        throw std::logic_error("make_hom: map on " + src->name() + " is not a homomorphism");
  return h;
}

Hom trivial_hom(const GroupPtr& src, const ElemSet& dom) {
  return make_hom(src, dom, model("S1").group, [](Elem) { return 0; });
}

bool is_symmetric_model(const GroupPtr& g) {
  return g->kind() == Group::Kind::Permutation && g->degree() >= 2 && g->degree() <= 5 &&
         g.get() == Group::symmetric(g->degree()).get();
}

bool is_vector_model(const GroupPtr& g) {
  return g->kind() == Group::Kind::F2Space && g->f2_dim() >= 1 && g.get() == Group::f2space(g->f2_dim()).get();
}

std::string span_name(const Group& g, const ElemSet& s) {
  if (s.size() == 1) return "0";
  std::vector<Elem> basis;
  ElemSet span{0};
  for (Elem x : s) {
    if (contains(span, x)) continue;
    basis.push_back(x);
    ElemSet next = span;
    for (Elem y : span) next.push_back(y ^ x);
    std::sort(next.begin(), next.end());
    span = next;
  }
  std::string out = "<";
  for (std::size_t i = 0; i < basis.size(); ++i) out += (i ? "," : "") + g.elem_name(basis[i]);
  return out + ">";
}

std::string subgroup_name(const GroupPtr& g, const ElemSet& s) {
  if (g->kind() == Group::Kind::F2Space) return span_name(*g, s);
  if (s.size() == 1) return "S1";
  if (is_symmetric_model(g))
    if (auto n = x_lattice(g->degree()).name_of(s)) return *n;
  std::string out = "<";
  auto gens = generators(*g, s);
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + g->elem_name(gens[i]);
  return out + ">";
}

// Image of a permutation group element in S_k after relabelling the points
// `points` (1-based, in order) as 1..k.
Elem restrict_perm(const Group& g, Elem a, const std::vector<int>& points, const Group& target) {
  Perm q(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    int img = g.perm(a)[points[i] - 1] + 1;
    auto it = std::find(points.begin(), points.end(), img);
    if (it == points.end()) throw std::logic_error("restrict_perm: points not preserved");
    q[i] = static_cast<std::uint8_t>(it - points.begin());
  }
  return *target.find_perm(q);
}

bool swaps(const Group& g, Elem a, int i, int j) { return g.perm(a)[i - 1] == j - 1; }

// Identification of a member of X(S_n) with its standard model.
std::pair<std::string, Hom> lattice_iso(int n, const std::string& name) {
  const auto& lat = x_lattice(n);
  const GroupPtr& g = lat.group;
  const ElemSet& dom = lat.at(name).members;
  auto to_model = [&](const std::string& m, std::function<Elem(Elem)> f) {
    return std::make_pair(m, make_hom(g, dom, model(m).group, f));
  };
  if (name == "S1") return {"S1", trivial_hom(g, dom)};
  if (name == "S2") {
    return to_model("S2", [&](Elem a) { return a == 0 ? 0 : 1; });
  }
  if (name == "S3") {
    std::vector<int> pts = n == 5 ? std::vector<int>{3, 4, 5} : std::vector<int>{1, 2, 3};
    const auto& t = *model("S3").group;
    return to_model("S3", [&, pts](Elem a) { return restrict_perm(*g, a, pts, t); });
  }
  if (name == "S4") {
    const auto& t = *model("S4").group;
    return to_model("S4", [&](Elem a) { return restrict_perm(*g, a, {1, 2, 3, 4}, t); });
  }
  if (name == "S5") return to_model("S5", [](Elem a) { return a; });
  if (name == "S2S2") {
    const auto& t = *model("S2xS2").group;
    return to_model("S2xS2", [&](Elem a) {
      return t.join({swaps(*g, a, 1, 2) ? 1 : 0, swaps(*g, a, 3, 4) ? 1 : 0});
    });
  }
  if (name == "S3S2") {
    const auto& t = *model("S3xS2").group;
    const auto& s3 = *model("S3").group;
    return to_model("S3xS2", [&](Elem a) {
      return t.join({restrict_perm(*g, a, {3, 4, 5}, s3), swaps(*g, a, 1, 2) ? 1 : 0});
    });
  }
  throw std::invalid_argument("no standard model for " + name + " in S" + std::to_string(n));
}

template <class K, class V>
struct Memo {
  std::recursive_mutex mu;
  std::map<K, V> values;
};

}  // namespace

// ---- models and lattices -------------------------------------------------------

const Model& model(const std::string& name) {
  static Memo<std::string, std::unique_ptr<Model>> memo;
  std::lock_guard<std::recursive_mutex> lock(memo.mu);
  if (auto it = memo.values.find(name); it != memo.values.end()) return *it->second;
  auto m = std::make_unique<Model>();
  m->name = name;
  if (name == "S2xS2" || name == "S3xS2") {
    m->space = MSpace::product({model(name.substr(0, 2)).space, model("S2").space});
    m->group = m->space->group();
  } else {
    m->group = build_standard(name);
    if (m->group->kind() == Group::Kind::Product) throw std::invalid_argument("model: not a standard group: " + name);
    m->space = MSpace::build(m->group);
  }
  return *(memo.values[name] = std::move(m));
}

const Subgroup& XLattice::at(const std::string& name) const {
  for (const auto& s : members)
    if (s.name == name) return s;
  throw std::invalid_argument("X(" + group->name() + ") has no member " + name);
}

std::optional<std::string> XLattice::name_of(const ElemSet& s) const {
  for (const auto& m : members)
    if (m.members == s) return m.name;
  return std::nullopt;
}

const XLattice& x_lattice(int n) {
  static Memo<int, XLattice> memo;
  std::lock_guard<std::recursive_mutex> lock(memo.mu);
  if (auto it = memo.values.find(n); it != memo.values.end()) return it->second;
  if (n < 2 || n > 5) throw std::invalid_argument("x_lattice: n must be in 2..5");
  XLattice lat;
  lat.group = Group::symmetric(n);
  const Group& g = *lat.group;
  auto add = [&](std::string name, ElemSet s) { lat.members.push_back({std::move(s), std::move(name)}); };
  auto fixing = [&](int point) {
    ElemSet s;
    for (Elem a = 0; a < g.order(); ++a)
      if (g.perm(a)[point - 1] == point - 1) s.push_back(a);
    return s;
  };
  if (n == 5) {
    Elem sigma = find_cycles(g, {{1, 2}});
    Elem sigma2 = find_cycles(g, {{1, 2}, {3, 4}});
    ElemSet s3s2 = centralizer(g, sigma), d8 = centralizer(g, sigma2);
    std::vector<Elem> u;
    for (Elem a : s3s2)
      if (a != sigma && cycle_type(g.perm(a)) == cycle_type(g.perm(sigma))) u.push_back(a);
    add("S5", all_of(g));
    add("S4", fixing(5));  // omega'_4: omega_4 followed by the identity
    add("S3S2", s3s2);
    add("D8", d8);
    add("S3", generate(g, u));
    add("S2S2", intersect(s3s2, d8));
    add("S2", generate(g, {sigma}));
  } else if (n == 4) {
    Elem sigma = find_cycles(g, {{1, 2}});
    ElemSet s2s2 = centralizer(g, sigma);
    Elem special = -1;
    for (Elem a : s2s2)
      if (centralizer(g, a).size() == 8) special = a;
    add("S4", all_of(g));
    add("D8", centralizer(g, special));
    add("S3", fixing(4));  // omega'_3: omega_3 followed by the identity
    add("S2S2", s2s2);
    add("S2", generate(g, {sigma}));
  } else if (n == 3) {
    add("S3", all_of(g));
    add("S2", generate(g, {find_cycles(g, {{1, 2}})}));
  } else {
    add("S2", all_of(g));
  }
  add("S1", {0});
  return memo.values[n] = std::move(lat);
}

// ---- the collections c, FC, tilde FC -------------------------------------------

std::vector<HomEntry> frak_c(const GroupPtr& g) {
  std::vector<HomEntry> out;
  auto entry = [&](const ElemSet& dom, const std::string& target, std::function<Elem(Elem)> f) {
    out.push_back({{dom, subgroup_name(g, dom)}, target, make_hom(g, dom, model(target).group, f)});
  };
  auto to_one = [](Elem) { return 0; };
  if (g->order() == 1) return out;
  if (is_symmetric_model(g)) {
    const int n = g->degree();
    const auto& lat = x_lattice(n);
    auto sub = [&](const char* s) -> const ElemSet& { return lat.at(s).members; };
    switch (n) {
      case 2:
        entry(sub("S1"), "S1", to_one);
        entry(sub("S2"), "S1", to_one);
        break;
      case 3:
        entry(sub("S2"), "S1", to_one);
        entry(sub("S3"), "S1", to_one);
        break;
      case 4:
        // p: kernel <(12)>, f: kernel S2S2
        entry(sub("S2S2"), "S2", [&](Elem a) { return swaps(*g, a, 3, 4) ? 1 : 0; });
        entry(sub("D8"), "S2", [&](Elem a) { return contains(sub("S2S2"), a) ? 0 : 1; });
        entry(sub("S3"), "S1", to_one);
        entry(sub("S4"), "S1", to_one);
        break;
      case 5: {
        const auto& s3 = *model("S3").group;
        entry(sub("S3S2"), "S3", [&](Elem a) { return restrict_perm(*g, a, {3, 4, 5}, s3); });
        entry(sub("S3S2"), "S2", [&](Elem a) { return swaps(*g, a, 1, 2) ? 1 : 0; });
        entry(sub("D8"), "S2", [&](Elem a) { return contains(sub("S2S2"), a) ? 0 : 1; });
        entry(sub("S4"), "S1", to_one);
        // Printed as S5 -> S4, which is not surjective; read as S5 -> S1.
        entry(sub("S5"), "S1", to_one);
        // Not in the printed list; needed so that S2 lies in FC(S5).
        entry(sub("S2"), "S1", to_one);
        break;
      }
    }
    return out;
  }
  if (is_vector_model(g)) {
    const int n = g->f2_dim();
    if (n == 1) {
      entry({0}, "S1", to_one);
      entry({0, 1}, "S1", to_one);
      return out;
    }
    const std::string target = "V" + std::to_string(n - 1);
    // V^{j,j+1} with basis x1..x_{j-1}, x_j+x_{j+1}, x_{j+2}..x_n, as V_{n-1}
    for (int j = 1; j < n; ++j) {
      std::vector<Elem> basis;
      for (int i = 1; i <= n; ++i) {
        if (i == j + 1) continue;
        basis.push_back(i == j ? (3 << (j - 1)) : (1 << (i - 1)));
      }
      std::map<Elem, Elem> coords;
      for (int c = 0; c < (1 << (n - 1)); ++c) {
        Elem x = 0;
        for (int i = 0; i < n - 1; ++i)
          if (c >> i & 1) x ^= basis[i];
        coords[x] = c;
      }
      ElemSet dom;
      for (const auto& kv : coords) dom.push_back(kv.first);
      entry(dom, target, [coords](Elem a) { return coords.at(a); });
    }
    // V -> V^j, x_j -> 0
    for (int j = 1; j <= n; ++j) {
      entry(all_of(*g), target, [j](Elem a) {
        Elem low = a & ((1 << (j - 1)) - 1);
        return low | ((a >> j) << (j - 1));
      });
    }
    // V^1 (basis x2..xn) identically
    ElemSet v1;
    for (Elem a = 0; a < g->order(); a += 2) v1.push_back(a);
    entry(v1, target, [](Elem a) { return a >> 1; });
    return out;
  }
  throw std::invalid_argument("frak_c: unsupported group " + g->name());
}

std::vector<Subgroup> fc_set(const GroupPtr& g) {
  static Memo<const Group*, std::vector<Subgroup>> memo;
  std::lock_guard<std::recursive_mutex> lock(memo.mu);
  if (auto it = memo.values.find(g.get()); it != memo.values.end()) return it->second;
  std::vector<Subgroup> out;
  if (g->order() == 1) {
    out.push_back({{0}, subgroup_name(g, {0})});
  } else {
    for (const auto& e : frak_c(g))
      for (const auto& s : fc_set(model(e.target).group)) {
        ElemSet pre = e.hom.preimage(s.members);
        if (std::none_of(out.begin(), out.end(), [&](const Subgroup& t) { return t.members == pre; }))
          out.push_back({pre, subgroup_name(g, pre)});
      }
  }
  return memo.values[g.get()] = out;
}

std::vector<SubgroupPair> tilde_fc_set(const GroupPtr& g) {
  static Memo<const Group*, std::vector<SubgroupPair>> memo;
  std::lock_guard<std::recursive_mutex> lock(memo.mu);
  if (auto it = memo.values.find(g.get()); it != memo.values.end()) return it->second;
  std::vector<SubgroupPair> out;
  auto push = [&](const ElemSet& lower, const ElemSet& upper, const std::string& q, Hom proj, const char* rule) {
    for (const auto& p : out)
      if (p.lower.members == lower && p.upper.members == upper) return;
    if (!is_normal(*g, lower, upper) || proj.kernel() != lower || proj.domain != upper || !proj.is_surjective())
      throw std::logic_error("tilde_fc_set: invalid pair in " + g->name());
    out.push_back({{lower, subgroup_name(g, lower)}, {upper, subgroup_name(g, upper)}, q, std::move(proj), rule});
  };
  if (g->order() == 1) {
    push({0}, {0}, "S1", trivial_hom(g, {0}), "base");
    return memo.values[g.get()] = out;
  }
  // (i) pull back along c(G)
  for (const auto& e : frak_c(g))
    for (const auto& p : tilde_fc_set(model(e.target).group)) {
      ElemSet lower = e.hom.preimage(p.lower.members);
      ElemSet upper = e.hom.preimage(p.upper.members);
      push(lower, upper, p.quotient, compose(p.projection, e.hom), "i");
    }
  const auto fc = fc_set(g);
  const bool trivial_in_fc =
      std::any_of(fc.begin(), fc.end(), [](const Subgroup& s) { return s.members.size() == 1; });
  // (ii) S_n, n >= 3: (S1 in H) for H in X(S_n) with a standard quotient
  if (is_symmetric_model(g) && !trivial_in_fc) {
    for (const auto& h : x_lattice(g->degree()).members) {
      if (h.name == "D8") continue;
      auto [q, iso] = lattice_iso(g->degree(), h.name);
      push({0}, h.members, q, iso, "ii");
    }
  }
  // (iii) (S1 in G) when S1 is in FC(G)
  if (trivial_in_fc) {
    std::string q = is_vector_model(g) ? "V" + std::to_string(g->f2_dim()) : g->name();
    push({0}, all_of(*g), q, make_hom(g, all_of(*g), model(q).group, [](Elem a) { return a; }), "iii");
  }
  return memo.values[g.get()] = out;
}

// ---- Prim ------------------------------------------------------------------------

namespace {

MVector lambda_vector(const std::string& q, const std::string& arg) {
  const MSpacePtr& s = model(q).space;
  auto p = [&](const std::string& text) { return MVector::parse(s, text); };
  if (arg == "1") return p("(1,1)");
  if (q == "S2" && arg == "-1") return p("(g2,e)+(1,1)");
  if (q == "S3" && (arg == "th" || arg == "th2")) return p("(g3," + arg + ")+(g2,1)+(1,1)");
  if (q == "S4" && (arg == "i" || arg == "-i")) return p("(g4," + arg + ")+(g4,-1)+(g3,1)+(1,l2)+(1,1)");
  if (q == "S5" && (arg == "z" || arg == "z2" || arg == "z3" || arg == "z4"))
    return p("(g5," + arg + ")+(1,l4)+2(1,l2)+(1,nu)+(1,nu')+(1,1)");
  throw std::invalid_argument("no primitive element L[" + arg + "] for " + q);
}

std::vector<std::string> prim_names(const std::string& q, bool extra) {
  if (q == "S1") return {"1"};
  if (q == "S2") return {"L[-1]", "1"};
  if (q == "S3") return {"L[th]", "L[th2]", "1"};
  if (q == "S4") return {"L[i]", "L[-i]", "1"};
  if (q == "S5") {
    std::vector<std::string> v{"L[z]", "L'[z,z2]", "L'[z2,z4]", "L'[z3,z]", "1"};
    if (extra) v.insert(v.end(), {"L[z2]", "L[z3]", "L[z4]"});
    return v;
  }
  if (q == "S2xS2") return {"L[-1,-1]", "L[-1,1]", "1"};
  if (q == "S3xS2") return {"L[th,-1]", "L[th2,-1]", "L[th,1]", "L[th2,1]", "L[1,-1]", "1"};
  if (q.size() > 1 && q[0] == 'V') {
    int m = std::stoi(q.substr(1));
    std::vector<std::string> v;
    for (int k = 0; k <= m; ++k) v.push_back("f" + std::to_string(k));
    return v;
  }
  throw std::invalid_argument("prim_set: quotient type outside the list: " + q);
}

// f_k on M(V_m) = V (D = 2m), with x_i <-> e_{2i} and characters from the odd part.
MVector f_vector(int m, int k) {
  const MSpacePtr& s = model("V" + std::to_string(m)).space;
  const int d = 2 * m;
  std::vector<std::uint32_t> gens;
  for (int j = 1; j <= k; ++j) {
    std::uint32_t u = 0;
    for (int i = j; i <= d + 1 - j; ++i) u |= 1u << (i - 1);
    gens.push_back(u);
  }
  MVector v(s);
  for (std::uint32_t c = 0; c < (1u << k); ++c) {
    std::uint32_t vec = 0;
    for (int j = 0; j < k; ++j)
      if (c >> j & 1) vec ^= gens[j];
    auto bit = [&](int i) { return i >= 1 && i <= d ? (vec >> (i - 1)) & 1 : 0u; };
    Elem x = 0;
    int w = 0;
    for (int i = 1; i <= m; ++i) {
      if (bit(2 * i)) x |= 1 << (i - 1);
      if (bit(2 * i - 1) ^ bit(2 * i + 1)) w |= 1 << (i - 1);
    }
    v.add(s->index(s->class_of(x), w), Cyclo(1));
  }
  return v;
}

}  // namespace

PrimElement prim_element(const std::string& q, const std::string& name) {
  const MSpacePtr& s = model(q).space;
  if (q.size() > 1 && q[0] == 'V' && name.size() > 1 && name[0] == 'f') {
    int m = std::stoi(q.substr(1)), k = std::stoi(name.substr(1));
    if (k < 0 || k > m) throw std::invalid_argument("no " + name + " on " + q);
    return {name, f_vector(m, k)};
  }
  if (name == "1") {
    if (q == "S2xS2" || q == "S3xS2")
      return {name, external_product(s, lambda_vector(q.substr(0, 2), "1"), lambda_vector("S2", "1"))};
    if (q[0] == 'V') return {name, f_vector(std::stoi(q.substr(1)), 0)};
    return {name, lambda_vector(q, "1")};
  }
  if (name.rfind("L'[", 0) == 0 && q == "S5") {
    auto comma = name.find(',');
    std::string a = name.substr(3, comma - 3), b = name.substr(comma + 1, name.size() - comma - 2);
    auto power = [](const std::string& z) { return z == "z" ? 1 : std::stoi(z.substr(1)); };
    if ((2 * power(a)) % 5 != power(b) % 5) throw std::invalid_argument("malformed " + name);
    return {name, MVector::parse(s, "(g5," + a + ")+(g5," + b +
                                        ")+(g2',1)+(g2',e')+(g2',e'')+(g2',e)+(1,l2)+(1,nu)+(1,1)")};
  }
  if (name.rfind("L[", 0) == 0 && name.back() == ']') {
    std::string args = name.substr(2, name.size() - 3);
    auto comma = args.find(',');
    if (comma == std::string::npos) return {name, lambda_vector(q, args)};
    if (q != "S2xS2" && q != "S3xS2") throw std::invalid_argument(name + " needs a product quotient");
    return {name, external_product(s, lambda_vector(q.substr(0, 2), args.substr(0, comma)),
                                   lambda_vector("S2", args.substr(comma + 1)))};
  }
  throw std::invalid_argument("unknown primitive element " + name + " for " + q);
}

std::vector<PrimElement> prim_set(const std::string& q, bool extra) {
  std::vector<PrimElement> out;
  for (const auto& n : prim_names(q, extra)) out.push_back(prim_element(q, n));
  return out;
}

std::vector<YTriple> y_set(const GroupPtr& g) {
  std::vector<YTriple> out;
  for (const auto& p : tilde_fc_set(g))
    for (auto& xi : prim_set(p.quotient)) out.push_back({p, std::move(xi)});
  return out;
}

// ---- beta --------------------------------------------------------------------------

MSpacePtr space_for(const std::string& descriptor) {
  GroupPtr g = build_standard(descriptor);
  if (g->kind() != Group::Kind::Product) return model(g->name()).space;
  std::vector<MSpacePtr> spaces;
  for (const auto& f : g->factors()) spaces.push_back(model(f->name()).space);
  return MSpace::product(spaces);
}

std::vector<BasisElement> basis_beta(const GroupPtr& g, Variant variant) {
  if (g->kind() == Group::Kind::Product) {
    std::vector<std::vector<BasisElement>> parts;
    std::vector<MSpacePtr> spaces;
    for (const auto& f : g->factors()) {
      parts.push_back(basis_beta(f, variant));
      spaces.push_back(model(f->name()).space);
    }
    MSpacePtr target = MSpace::product(spaces);
    std::vector<BasisElement> out{{"", MVector(target)}};
    std::vector<std::vector<std::pair<std::vector<int>, Cyclo>>> acc{{{{}, Cyclo(1)}}};
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::vector<BasisElement> next_out;
      std::vector<std::vector<std::pair<std::vector<int>, Cyclo>>> next_acc;
      for (std::size_t a = 0; a < out.size(); ++a)
        for (const auto& b : parts[i]) {
          std::vector<std::pair<std::vector<int>, Cyclo>> terms;
          for (const auto& [idx, c] : acc[a])
            for (const auto& [m, d] : b.vector.terms()) {
              auto idx2 = idx;
              idx2.push_back(m);
              terms.push_back({idx2, c * d});
            }
          next_acc.push_back(std::move(terms));
          next_out.push_back({out[a].provenance + (i ? " x " : "") + b.provenance, MVector(target)});
        }
      out = std::move(next_out);
      acc = std::move(next_acc);
    }
    for (std::size_t a = 0; a < out.size(); ++a)
      for (const auto& [idx, c] : acc[a]) out[a].vector.add(target->product_index(idx), c);
    return out;
  }
  const Model& here = model(g->name());
  if (here.group.get() != g.get()) throw std::invalid_argument("basis_beta: unsupported group " + g->name());
  std::vector<YTriple> ys = y_set(g);
  if (variant == Variant::Primed) {
    if (g->name() != "S5") throw std::invalid_argument("the primed variant is defined for S5 only");
    for (auto& y : ys)
      if (y.pair.quotient == "S5" && y.pair.lower.members.size() == 1 && y.xi.name != "1") {
        const std::string& n = y.xi.name;
        std::string z = n == "L[z]" ? "z" : n == "L'[z,z2]" ? "z2" : n == "L'[z3,z]" ? "z3" : "z4";
        y.xi = prim_element("S5", "L[" + z + "]");
      }
  }
  std::vector<BasisElement> out;
  for (const auto& y : ys) {
    MVector v = s_map(here.space, y.pair.projection, model(y.pair.quotient).space, y.xi.vector);
    out.push_back({y.pair.lower.name + " " + y.pair.upper.name + " " + y.xi.name, std::move(v)});
  }
  return out;
}

SubgroupPair lattice_pair(int n, const std::string& lower, const std::string& upper) {
  const auto& lat = x_lattice(n);
  const GroupPtr& g = lat.group;
  const Subgroup& lo = lat.at(lower);
  const Subgroup& up = lat.at(upper);
  auto pair = [&](const std::string& q, Hom h) { return SubgroupPair{lo, up, q, std::move(h), "lattice"}; };
  if (lower == upper) return pair("S1", trivial_hom(g, up.members));
  if (lower == "S1") {
    auto [q, iso] = lattice_iso(n, upper);
    return pair(q, iso);
  }
  auto to = [&](const std::string& q, std::function<Elem(Elem)> f) {
    return pair(q, make_hom(g, up.members, model(q).group, f));
  };
  if (lower == "S2" && upper == "S2S2") return to("S2", [&](Elem a) { return swaps(*g, a, 3, 4) ? 1 : 0; });
  if (lower == "S2" && upper == "S3S2" && n == 5) {
    const auto& s3 = *model("S3").group;
    return to("S3", [&](Elem a) { return restrict_perm(*g, a, {3, 4, 5}, s3); });
  }
  if (lower == "S3" && upper == "S3S2" && n == 5) return to("S2", [&](Elem a) { return swaps(*g, a, 1, 2) ? 1 : 0; });
  if (lower == "S2S2" && upper == "D8") {
    const ElemSet& k = lo.members;
    return to("S2", [&](Elem a) { return contains(k, a) ? 0 : 1; });
  }
  throw std::invalid_argument("no fixed identification for (" + lower + " in " + upper + ") in S" + std::to_string(n));
}

// ---- golden tables ---------------------------------------------------------------

const std::string& golden_text() {
  static const std::string text(kGoldenData);
  return text;
}

const std::vector<GoldenRow>& golden_rows() {
  static const std::vector<GoldenRow> rows = [] {
    std::vector<GoldenRow> out;
    std::istringstream in(golden_text());
    std::string line;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
      if (trim(line).empty() || line[0] == '#') continue;
      std::vector<std::string> cols;
      std::stringstream ss(line);
      std::string c;
      while (std::getline(ss, c, '|')) cols.push_back(trim(c));
      if (cols.size() != 4 || cols[0].size() != 2 || cols[0][0] != 'S')
        throw std::logic_error("malformed golden row: " + line);
      GoldenRow r;
      r.n = cols[0][1] - '0';
      r.lhs = cols[1];
      std::stringstream tri(cols[2]);
      tri >> r.lower >> r.upper >> r.xi;
      if (cols[3] != "-") r.rhs = cols[3];
      out.push_back(std::move(r));
    }
    return out;
  }();
  return rows;
}

std::vector<GoldenRow> golden_table(int n) {
  std::vector<GoldenRow> out;
  for (const auto& r : golden_rows())
    if (r.n == n) out.push_back(r);
  return out;
}

MVector evaluate_row(const GoldenRow& row) {
  const MSpacePtr& space = model("S" + std::to_string(row.n)).space;
  if (row.n == 1) return s_map(space, trivial_hom(space->group(), {0}), model("S1").space, prim_element("S1", "1").vector);
  SubgroupPair p = lattice_pair(row.n, row.lower, row.upper);
  return s_map(space, p.projection, model(p.quotient).space, prim_element(p.quotient, row.xi).vector);
}

}  // namespace bipos
