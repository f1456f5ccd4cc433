#include "bipos/group.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bipos {

Perm perm_from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i], to = c[(i + 1) % c.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw std::invalid_argument("perm_from_cycles: point out of range");
      p[from - 1] = static_cast<std::uint8_t>(to - 1);
    }
  }
  return p;
}

std::string perm_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first && p.size() > 9) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> t;
  std::vector<bool> seen(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

namespace {

Perm compose_perm(const Perm& a, const Perm& b) {  // a after b
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

void Group::finish_inverses() {
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
}

GroupPtr Group::permutation(std::string name, int degree, const std::vector<Perm>& gens) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Perm, int> seen{{id, 0}};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& s : gens) {
        Perm y = compose_perm(s, x);
        if (seen.emplace(y, 0).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->kind_ = Kind::Permutation;
  g->degree_ = degree;
  for (auto& [p, idx] : seen) {  // std::map order puts the identity first
    idx = static_cast<int>(g->perms_.size());
    g->perms_.push_back(p);
  }
  g->n_ = static_cast<int>(g->perms_.size());
  g->table_.resize(static_cast<std::size_t>(g->n_) * g->n_);
  for (int a = 0; a < g->n_; ++a)
    for (int b = 0; b < g->n_; ++b)
      g->table_[static_cast<std::size_t>(a) * g->n_ + b] = seen.at(compose_perm(g->perms_[a], g->perms_[b]));
  g->finish_inverses();
  return g;
}

// S_n and V_n are shared instances, so spaces and homomorphisms built in
// different places agree on the group by pointer.
GroupPtr Group::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric: n >= 1 required");
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(perm_from_cycles(n, {{1, 2}}));
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 1);
    gens.push_back(perm_from_cycles(n, {cyc}));
  }
  return cache[n] = permutation("S" + std::to_string(n), n, gens);
}

GroupPtr Group::f2space(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("f2space: dimension must be in [0,12]");
  static std::mutex mu;
  static std::map<int, GroupPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = "V" + std::to_string(n);
  g->kind_ = Kind::F2Space;
  g->f2_dim_ = n;
  g->n_ = 1 << n;
  return cache[n] = g;
}

GroupPtr Group::product(std::vector<GroupPtr> factors) {
  if (factors.empty()) throw std::invalid_argument("product: no factors");
  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = Kind::Product;
  g->n_ = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    g->name_ += (i ? "x" : "") + factors[i]->name();
    g->n_ *= factors[i]->order();
  }
  g->factors_ = std::move(factors);
  g->inv_.resize(g->n_);
  for (int a = 0; a < g->n_; ++a) {
    auto parts = g->split(a);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = g->factors_[i]->inv(parts[i]);
    g->inv_[a] = g->join(parts);
  }
  if (g->n_ <= 1024) {
    g->table_.resize(static_cast<std::size_t>(g->n_) * g->n_);
    for (int a = 0; a < g->n_; ++a)
      for (int b = 0; b < g->n_; ++b) g->table_[static_cast<std::size_t>(a) * g->n_ + b] = g->product_mul(a, b);
  }
  return g;
}

GroupPtr Group::from_table(std::string name, std::vector<int> table, std::vector<std::string> names) {
  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->kind_ = Kind::Table;
  g->n_ = static_cast<int>(names.size());
  if (table.size() != static_cast<std::size_t>(g->n_) * g->n_) throw std::invalid_argument("from_table: size");
  g->table_ = std::move(table);
  g->names_ = std::move(names);
  for (int a = 0; a < g->n_; ++a)
    if (g->mul(0, a) != a || g->mul(a, 0) != a) throw std::invalid_argument("from_table: element 0 is not the identity");
  g->finish_inverses();
  for (int a = 0; a < g->n_; ++a)
    if (g->inv_[a] < 0) throw std::invalid_argument("from_table: missing inverse");
  return g;
}

std::vector<Elem> Group::split(Elem a) const {
  std::vector<Elem> parts(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    parts[i] = a % factors_[i]->order();
    a /= factors_[i]->order();
  }
  return parts;
}

Elem Group::join(const std::vector<Elem>& parts) const {
  Elem a = 0;
  for (std::size_t i = factors_.size(); i-- > 0;) a = a * factors_[i]->order() + parts[i];
  return a;
}

Elem Group::product_mul(Elem a, Elem b) const {
  auto pa = split(a), pb = split(b);
  for (std::size_t i = 0; i < pa.size(); ++i) pa[i] = factors_[i]->mul(pa[i], pb[i]);
  return join(pa);
}

int Group::elem_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool Group::is_abelian() const {
  if (kind_ == Kind::F2Space) return true;
  if (kind_ == Kind::Product)
    return std::all_of(factors_.begin(), factors_.end(), [](const GroupPtr& f) { return f->is_abelian(); });
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!commute(a, b)) return false;
  return true;
}

std::string Group::elem_name(Elem a) const {
  switch (kind_) {
    case Kind::Permutation:
      return perm_cycles(perms_[a]);
    case Kind::F2Space: {
      if (a == 0) return "0";
      std::string s;
      for (int i = 0; i < f2_dim_; ++i)
        if (a >> i & 1) s += (s.empty() ? "x" : "+x") + std::to_string(i + 1);
      return s;
    }
    case Kind::Product: {
      auto parts = split(a);
      std::string s = "(";
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + factors_[i]->elem_name(parts[i]);
      return s + ")";
    }
    case Kind::Table:
      return names_.empty() ? std::to_string(a) : names_[a];
  }
  return std::to_string(a);
}

std::optional<Elem> Group::find_perm(const Perm& p) const {
  auto it = std::find(perms_.begin(), perms_.end(), p);
  if (it == perms_.end()) return std::nullopt;
  return static_cast<Elem>(it - perms_.begin());
}

GroupPtr build_standard(const std::string& descriptor) {
  std::vector<GroupPtr> parts;
  std::stringstream ss(descriptor);
  std::string tok;
  while (std::getline(ss, tok, 'x')) {
    if (tok.size() < 2 || (tok[0] != 'S' && tok[0] != 'V'))
      throw std::invalid_argument("unsupported group descriptor: " + descriptor);
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("unsupported group descriptor: " + descriptor);
    }
    if (tok[0] == 'S') {
      if (n < 1 || n > 5) throw std::invalid_argument("S_n supported for 1 <= n <= 5: " + tok);
      parts.push_back(Group::symmetric(n));
    } else {
      if (n < 1 || n > 12) throw std::invalid_argument("V_n supported for 1 <= n <= 12: " + tok);
      parts.push_back(Group::f2space(n));
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty group descriptor");
  if (parts.size() == 1) return parts[0];
  return Group::product(std::move(parts));
}

// ---- subgroups -------------------------------------------------------------

ElemSet generate(const Group& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out{0}, frontier{0};
  in[0] = 1;
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem s : gens) {
        Elem y = g.mul(s, x);
        if (!in[y]) {
          in[y] = 1;
          out.push_back(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const ElemSet& s, Elem x) { return std::binary_search(s.begin(), s.end(), x); }

bool is_subgroup(const Group& g, const ElemSet& h) {
  if (h.empty() || h[0] != 0) return false;
  for (Elem a : h) {
    if (!contains(h, g.inv(a))) return false;
    for (Elem b : h)
      if (!contains(h, g.mul(a, b))) return false;
  }
  return true;
}

bool is_normal(const Group& g, const ElemSet& k, const ElemSet& h) {
  for (Elem x : h)
    for (Elem a : k)
      if (!contains(k, g.conj(x, a))) return false;
  return true;
}

ElemSet centralizer(const Group& g, Elem x) {
  ElemSet z;
  for (Elem a = 0; a < g.order(); ++a)
    if (g.commute(a, x)) z.push_back(a);
  return z;
}

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<ConjClass> conjugacy_classes(const Group& g) {
  std::vector<ConjClass> out;
  std::vector<char> seen(g.order(), 0);
  for (Elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    ConjClass c{x, {}};
    if (g.kind() == Group::Kind::F2Space) {
      c.members = {x};
    } else {
      for (Elem y = 0; y < g.order(); ++y) c.members.push_back(g.conj(y, x));
      std::sort(c.members.begin(), c.members.end());
      c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
    }
    for (Elem y : c.members) seen[y] = 1;
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ConjClass& a, const ConjClass& b) { return a.members.size() < b.members.size(); });
  return out;
}

Embedded as_group(const Group& g, const ElemSet& h, std::string name) {
  Embedded e;
  e.to_parent = h;
  e.from_parent.assign(g.order(), -1);
  for (std::size_t i = 0; i < h.size(); ++i) e.from_parent[h[i]] = static_cast<int>(i);
  int n = static_cast<int>(h.size());
  if (g.kind() == Group::Kind::Permutation) {
    std::vector<Perm> gens;
    for (Elem x : generators(g, h)) gens.push_back(g.perm(x));
    auto sub = Group::permutation(std::move(name), g.degree(), gens);
    // Permutation groups sort their elements; the parent's element order is
    // lexicographic too, so local index i corresponds to h[i].
    e.group = sub;
    return e;
  }
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = g.elem_name(h[a]);
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = e.from_parent[g.mul(h[a], h[b])];
  }
  e.group = Group::from_table(std::move(name), std::move(table), std::move(names));
  return e;
}

// ---- homomorphisms ---------------------------------------------------------

ElemSet Hom::kernel() const {
  ElemSet k;
  for (Elem a : domain)
    if (image[a] == 0) k.push_back(a);
  return k;
}

bool Hom::is_surjective() const {
  std::vector<char> hit(target->order(), 0);
  for (Elem a : domain) hit[image[a]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c; });
}

bool Hom::is_injective() const { return kernel().size() == 1; }

ElemSet Hom::preimage(const ElemSet& s) const {
  ElemSet out;
  for (Elem a : domain)
    if (contains(s, image[a])) out.push_back(a);
  return out;
}

std::optional<Hom> hom_from_generators(GroupPtr source, const std::vector<Elem>& gens, GroupPtr target,
                                       const std::vector<Elem>& images) {
  Hom h{source, {}, target, std::vector<Elem>(source->order(), -1)};
  h.image[0] = 0;
  std::deque<Elem> queue{0};
  while (!queue.empty()) {
    Elem x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = source->mul(gens[i], x);
      Elem fy = target->mul(images[i], h.image[x]);
      if (h.image[y] < 0) {
        h.image[y] = fy;
        queue.push_back(y);
      } else if (h.image[y] != fy) {
        return std::nullopt;
      }
    }
  }
  for (Elem a = 0; a < source->order(); ++a)
    if (h.image[a] >= 0) h.domain.push_back(a);
  // BFS consistency on left multiplication by generators suffices: the map
  // is then a function of words, and it is a homomorphism iff it is well defined.
  return h;
}

Hom compose(const Hom& outer, const Hom& inner) {
  Hom h{inner.source, {}, outer.target, std::vector<Elem>(inner.source->order(), -1)};
  for (Elem a : inner.domain) {
    Elem b = inner.image[a];
    if (outer.image[b] >= 0) {
      h.image[a] = outer.image[b];
      h.domain.push_back(a);
    }
  }
  return h;
}

Hom restrict_hom(const Hom& h, const ElemSet& subdomain) {
  Hom r{h.source, {}, h.target, std::vector<Elem>(h.source->order(), -1)};
  for (Elem a : subdomain)
    if (h.image[a] >= 0) {
      r.image[a] = h.image[a];
      r.domain.push_back(a);
    }
  return r;
}

std::vector<Elem> generators(const Group& g, const ElemSet& h) {
  std::vector<Elem> gens;
  ElemSet cur{0};
  // Prefer elements of large order: fewer generators, faster searches.
  std::vector<Elem> cand(h.begin(), h.end());
  std::stable_sort(cand.begin(), cand.end(),
                   [&](Elem a, Elem b) { return g.elem_order(a) > g.elem_order(b); });
  for (Elem x : cand) {
    if (cur.size() == h.size()) break;
    if (contains(cur, x)) continue;
    gens.push_back(x);
    cur = generate(g, gens);
  }
  return gens;
}

std::vector<Elem> generators(const Group& g) {
  ElemSet all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return generators(g, all);
}

std::optional<std::vector<Elem>> find_isomorphism(const Group& model, const std::vector<Elem>& model_gens,
                                                  const Group& h) {
  if (model.order() != h.order()) return std::nullopt;
  std::vector<std::vector<Elem>> cands(model_gens.size());
  for (std::size_t i = 0; i < model_gens.size(); ++i) {
    int o = model.elem_order(model_gens[i]);
    for (Elem y = 0; y < h.order(); ++y)
      if (h.elem_order(y) == o) cands[i].push_back(y);
  }
  std::vector<Elem> choice(model_gens.size());
  std::vector<Elem> map;
  // Depth-first over generator images; each full choice is checked by a
  // word-consistency BFS and a bijectivity test.
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == model_gens.size()) {
      std::vector<Elem> img(model.order(), -1);
      std::vector<char> hit(h.order(), 0);
      img[0] = 0;
      hit[0] = 1;
      std::deque<Elem> queue{0};
      while (!queue.empty()) {
        Elem x = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < model_gens.size(); ++k) {
          Elem y = model.mul(model_gens[k], x);
          Elem fy = h.mul(choice[k], img[x]);
          if (img[y] < 0) {
            if (hit[fy]) return false;
            img[y] = fy;
            hit[fy] = 1;
            queue.push_back(y);
          } else if (img[y] != fy) {
            return false;
          }
        }
      }
      if (std::find(img.begin(), img.end(), -1) != img.end()) return false;
      map = std::move(img);
      return true;
    }
    for (Elem y : cands[i]) {
      choice[i] = y;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return map;
}

// ---- quotients -------------------------------------------------------------

Quotient quotient(GroupPtr g, const ElemSet& h, const ElemSet& k) {
  if (!is_normal(*g, k, h)) throw std::invalid_argument("quotient: subgroup is not normal");
  // Cosets xK, labelled by their smallest element; the identity coset first.
  std::vector<int> coset_of(g->order(), -1);
  std::vector<Elem> reps;
  for (Elem x : h) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem a : k) coset_of[g->mul(x, a)] = id;
  }
  int n = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = g->elem_name(reps[a]) + "K";
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = coset_of[g->mul(reps[a], reps[b])];
  }
  Quotient q;
  q.group = Group::from_table(g->name() + "/K", std::move(table), std::move(names));
  q.projection = Hom{g, h, q.group, std::vector<Elem>(g->order(), -1)};
  for (Elem x : h) q.projection.image[x] = coset_of[x];

  std::vector<GroupPtr> models;
  for (int m = 1; m <= 5; ++m) models.push_back(Group::symmetric(m));
  models.push_back(Group::product({Group::symmetric(2), Group::symmetric(2)}));
  models.push_back(Group::product({Group::symmetric(3), Group::symmetric(2)}));
  for (int m = 2; m <= 8; ++m) models.push_back(Group::f2space(m));
  for (const auto& model : models) {
    if (model->order() != n) continue;
    if (model->kind() == Group::Kind::F2Space && !q.group->is_abelian()) continue;
    auto iso = find_isomorphism(*model, generators(*model), *q.group);
    if (!iso) continue;
    Hom std_hom{q.group, {}, model, std::vector<Elem>(n, -1)};
    for (Elem a = 0; a < model->order(); ++a) std_hom.image[(*iso)[a]] = a;
    std_hom.domain.resize(n);
    std::iota(std_hom.domain.begin(), std_hom.domain.end(), 0);
    q.standard = std::move(std_hom);
    q.standard_name = model->name();
    break;
  }
  return q;
}

}  // namespace bipos
