#include "bipos/chartable.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace bipos {

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

// Beta-set form: removing a rim hook of length r moves a bead b -> b-r onto a
// free position; the sign is (-1)^(beads strictly between).
std::int64_t sn_character(const std::vector<int>& partition, const std::vector<int>& cycle_type) {
  int len = static_cast<int>(partition.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = partition[i] + (len - 1 - i);
  std::function<std::int64_t(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& b,
                                                                        std::size_t k) -> std::int64_t {
    if (k == cycle_type.size()) return 1;
    int r = cycle_type[k];
    std::int64_t total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
      int to = b[i] - r;
      if (to < 0 || std::find(b.begin(), b.end(), to) != b.end()) continue;
      int between = 0;
      for (int x : b)
        if (x > to && x < b[i]) ++between;
      int old = b[i];
      b[i] = to;
      std::int64_t sub = rec(b, k + 1);
      b[i] = old;
      total += (between % 2 ? -sub : sub);
    }
    return total;
  };
  return rec(beta, 0);
}

namespace {

std::string sn_label(const std::vector<int>& p) {
  int n = std::accumulate(p.begin(), p.end(), 0);
  static const std::map<std::vector<int>, std::string> names = {
      {{1}, "1"},
      {{2}, "1"}, {{1, 1}, "e"},
      {{3}, "1"}, {{2, 1}, "r"}, {{1, 1, 1}, "e"},
      {{4}, "1"}, {{3, 1}, "l1"}, {{2, 2}, "s"}, {{2, 1, 1}, "l2"}, {{1, 1, 1, 1}, "l3"},
      {{5}, "1"}, {{4, 1}, "l1"}, {{3, 2}, "nu"}, {{3, 1, 1}, "l2"}, {{2, 2, 1}, "nu'"},
      {{2, 1, 1, 1}, "l3"}, {{1, 1, 1, 1, 1}, "l4"}};
  auto it = names.find(p);
  if (it != names.end() && n <= 5) return it->second;
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

struct CatalogEntry {
  GroupPtr group;
  std::vector<Elem> gens;
  CharacterTable table;
};

CharacterTable symmetric_table(const Group& s) {
  CharacterTable t;
  t.recognized_as = s.name();
  for (const auto& p : partitions(s.degree())) {
    std::vector<Cyclo> vals(s.order());
    for (Elem a = 0; a < s.order(); ++a) vals[a] = Cyclo(sn_character(p, cycle_type(s.perm(a))));
    t.values.push_back(std::move(vals));
    t.labels.push_back(sn_label(p));
  }
  return t;
}

// D8 as the symmetries of the square 1-2-3-4: r = (1234), s = (13).
CatalogEntry dihedral8() {
  auto g = Group::permutation("D8", 4, {perm_from_cycles(4, {{1, 2, 3, 4}}), perm_from_cycles(4, {{1, 3}})});
  Elem r = *g->find_perm(perm_from_cycles(4, {{1, 2, 3, 4}}));
  Elem s = *g->find_perm(perm_from_cycles(4, {{1, 3}}));
  // Every element is r^a s^b in exactly one way.
  std::vector<std::pair<int, int>> word(g->order());
  Elem ra = 0;
  for (int a = 0; a < 4; ++a, ra = g->mul(r, ra)) {
    word[ra] = {a, 0};
    word[g->mul(ra, s)] = {a, 1};
  }
  CharacterTable t;
  t.recognized_as = "D8";
  const char* names[] = {"1", "eps_s", "eps_r", "eps_rs"};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      std::vector<Cyclo> vals(g->order());
      for (Elem e = 0; e < g->order(); ++e) {
        auto [a, b] = word[e];
        int sign = ((x ? a : 0) + (y ? b : 0)) % 2;
        vals[e] = Cyclo(sign ? -1 : 1);
      }
      t.values.push_back(std::move(vals));
      t.labels.push_back(names[2 * x + y]);
    }
  std::vector<Cyclo> two(g->order());
  for (Elem e = 0; e < g->order(); ++e) {
    auto [a, b] = word[e];
    two[e] = Cyclo(b ? 0 : (a == 0 ? 2 : (a == 2 ? -2 : 0)));
  }
  t.values.push_back(std::move(two));
  t.labels.push_back("r");
  return {g, {r, s}, t};
}

CatalogEntry s3_times_c2() {
  auto s3 = Group::symmetric(3);
  auto c2 = Group::symmetric(2);
  auto g = Group::product({s3, c2});
  auto t3 = symmetric_table(*s3);
  auto t2 = symmetric_table(*c2);
  CharacterTable t;
  t.recognized_as = "S3xC2";
  for (int i = 0; i < t3.size(); ++i)
    for (int j = 0; j < t2.size(); ++j) {
      std::vector<Cyclo> vals(g->order());
      for (Elem e = 0; e < g->order(); ++e) {
        auto p = g->split(e);
        vals[e] = t3.values[i][p[0]] * t2.values[j][p[1]];
      }
      t.values.push_back(std::move(vals));
      t.labels.push_back(t3.labels[i] + "x" + t2.labels[j]);
    }
  std::vector<Elem> gens;
  for (Elem a : generators(*s3)) gens.push_back(g->join({a, 0}));
  gens.push_back(g->join({0, 1}));
  return {g, gens, t};
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    for (int n = 3; n <= 5; ++n) {
      auto s = Group::symmetric(n);
      v.push_back({s, generators(*s), symmetric_table(*s)});
    }
    v.push_back(dihedral8());
    v.push_back(s3_times_c2());
    return v;
  }();
  return entries;
}

CharacterTable f2_table(const Group& g) {
  CharacterTable t;
  t.recognized_as = g.name();
  for (Elem w = 0; w < g.order(); ++w) {
    std::vector<Cyclo> vals(g.order());
    for (Elem v = 0; v < g.order(); ++v) vals[v] = Cyclo(__builtin_popcount(w & v) % 2 ? -1 : 1);
    t.values.push_back(std::move(vals));
    t.labels.push_back("w" + std::to_string(w));
  }
  return t;
}

// Direct decomposition into cyclic factors by backtracking over elements of
// decreasing order; |<S,h>| = |S| * ord(h) certifies a direct factor.
std::vector<Elem> cyclic_basis(const Group& g) {
  std::vector<Elem> order_sorted(g.order());
  std::iota(order_sorted.begin(), order_sorted.end(), 0);
  std::stable_sort(order_sorted.begin(), order_sorted.end(),
                   [&](Elem a, Elem b) { return g.elem_order(a) > g.elem_order(b); });
  std::vector<Elem> basis;
  std::function<bool(std::size_t)> rec = [&](std::size_t have) -> bool {
    if (static_cast<int>(have) == g.order()) return true;
    for (Elem h : order_sorted) {
      if (h == 0) continue;
      basis.push_back(h);
      std::size_t sz = generate(g, basis).size();
      if (sz == have * g.elem_order(h) && rec(sz)) return true;
      basis.pop_back();
    }
    return false;
  };
  if (!rec(1)) throw std::logic_error("cyclic_basis: no decomposition");
  return basis;
}

std::string cyclic_label(int m, int j) {
  if (j == 0) return "1";
  switch (m) {
    case 2: return "e";
    case 3: return j == 1 ? "th" : "th2";
    case 4: return j == 1 ? "i" : (j == 2 ? "-1" : "-i");
    case 5: return j == 1 ? "z" : "z" + std::to_string(j);
    default: return "c" + std::to_string(m) + "^" + std::to_string(j);
  }
}

CharacterTable abelian_table(const Group& g) {
  if (g.order() == 1) return {{{Cyclo(1)}}, {"1"}, "C1"};
  auto basis = cyclic_basis(g);
  std::vector<int> ord;
  for (Elem b : basis) ord.push_back(g.elem_order(b));
  for (int o : ord)
    if (Cyclo::kOrder % o != 0)
      throw std::runtime_error("character_table: abelian group of order " + std::to_string(g.order()) +
                               " has exponent outside the 60th roots of unity");
  // Coordinates of every element in the basis.
  std::vector<std::vector<int>> coord(g.order());
  std::vector<int> e(basis.size(), 0);
  std::function<void(std::size_t, Elem)> walk = [&](std::size_t i, Elem acc) {
    if (i == basis.size()) {
      coord[acc] = e;
      return;
    }
    Elem x = acc;
    for (int k = 0; k < ord[i]; ++k, x = g.mul(x, basis[i])) {
      e[i] = k;
      walk(i + 1, x);
    }
  };
  walk(0, 0);
  CharacterTable t;
  std::string name;
  for (std::size_t i = 0; i < ord.size(); ++i) name += (i ? "xC" : "C") + std::to_string(ord[i]);
  t.recognized_as = name;
  std::vector<int> j(basis.size(), 0);
  std::function<void(std::size_t)> chars = [&](std::size_t i) {
    if (i == basis.size()) {
      std::vector<Cyclo> vals(g.order());
      for (Elem a = 0; a < g.order(); ++a) {
        int expo = 0;  // in units of 1/60
        for (std::size_t k = 0; k < basis.size(); ++k) expo += (Cyclo::kOrder / ord[k]) * j[k] * coord[a][k];
        vals[a] = Cyclo::zeta60(expo);
      }
      t.values.push_back(std::move(vals));
      std::string lab;
      for (std::size_t k = 0; k < basis.size(); ++k) lab += (k ? "x" : "") + cyclic_label(ord[k], j[k]);
      t.labels.push_back(lab);
      return;
    }
    for (int k = 0; k < ord[i]; ++k) {
      j[i] = k;
      chars(i + 1);
    }
  };
  chars(0);
  return t;
}

}  // namespace

CharacterTable character_table(const Group& g) {
  if (g.kind() == Group::Kind::F2Space) return f2_table(g);
  if (g.is_abelian()) return abelian_table(g);
  if (g.kind() == Group::Kind::Permutation && g.order() > 1) {
    // A full symmetric group in its natural action needs no search.
    int deg = g.degree();
    std::int64_t fact = 1;
    for (int i = 2; i <= deg; ++i) fact *= i;
    if (fact == g.order()) return symmetric_table(g);
  }
  for (const auto& entry : catalog()) {
    if (entry.group->order() != g.order()) continue;
    auto iso = find_isomorphism(*entry.group, entry.gens, g);
    if (!iso) continue;
    CharacterTable t;
    t.recognized_as = entry.table.recognized_as;
    t.labels = entry.table.labels;
    for (const auto& row : entry.table.values) {
      std::vector<Cyclo> vals(g.order());
      for (Elem a = 0; a < entry.group->order(); ++a) vals[(*iso)[a]] = row[a];
      t.values.push_back(std::move(vals));
    }
    return t;
  }
  int exponent = 1;
  for (Elem a = 0; a < g.order(); ++a) exponent = std::lcm(exponent, g.elem_order(a));
  throw std::runtime_error("character_table: no catalog match for group of order " + std::to_string(g.order()) +
                           " and exponent " + std::to_string(exponent));
}

bool check_orthogonality(const Group& g, const CharacterTable& t) {
  int n = g.order();
  // Rows: <chi_i, chi_j> = delta_ij.
  for (int i = 0; i < t.size(); ++i)
    for (int j = i; j < t.size(); ++j) {
      Cyclo s;
      for (Elem a = 0; a < n; ++a) s += t.values[i][a] * t.values[j][a].conj();
      if (s != Cyclo(i == j ? n : 0)) return false;
    }
  // Columns: sum_chi chi(a) conj(chi(b)) = |Z(a)| if a ~ b else 0. Checked on
  // class representatives against every element.
  for (const auto& c : conjugacy_classes(g)) {
    Elem a = c.rep;
    std::int64_t zsize = n / static_cast<std::int64_t>(c.members.size());
    for (Elem b = 0; b < n; ++b) {
      Cyclo s;
      for (int i = 0; i < t.size(); ++i) s += t.values[i][a] * t.values[i][b].conj();
      if (s != Cyclo(contains(c.members, b) ? zsize : 0)) return false;
    }
  }
  return true;
}

}  // namespace bipos
