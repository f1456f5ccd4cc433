#include "bipos/verify.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <sstream>

#include "bipos/classical.hpp"
#include "json.hpp"

namespace bipos {

Check check_bipositivity(const std::vector<MVector>& basis, const FourierMatrix& A, double tol) {
  Check c{"bipositivity", true, ""};
  auto fail = [&](std::size_t j, const char* where, const MVector& v, int m, const Cyclo& val) {
    c.pass = false;
    c.witness = std::string(where) + " of basis vector " + std::to_string(j) + " has coefficient " + val.str() +
                " at " + v.space()->label(m);
  };
  for (std::size_t j = 0; j < basis.size() && c.pass; ++j) {
    for (const auto& [m, val] : basis[j].terms())
      if (!val.is_nonneg_real(tol)) {
        fail(j, "b", basis[j], m, val);
        break;
      }
    if (!c.pass) break;
    MVector a = A.apply(basis[j]);
    for (const auto& [m, val] : a.terms())
      if (!val.is_nonneg_real(tol)) {
        fail(j, "A(b)", a, m, val);
        break;
      }
  }
  return c;
}

namespace {

// m -> m' whenever m' != m lies in the support of iota(m). Acyclic iff the
// matching is unique; a topological order of it is the triangular order.
std::vector<std::vector<int>> support_digraph(const std::vector<MVector>& basis, const std::vector<int>& iota) {
  std::vector<std::vector<int>> out(iota.size());
  for (std::size_t m = 0; m < iota.size(); ++m)
    for (const auto& [k, c] : basis[iota[m]].terms())
      if (k != static_cast<int>(m)) out[m].push_back(k);
  return out;
}

// Kahn's algorithm, taking the largest available pair index first. Returns
// the order, or a cycle when one exists.
std::pair<std::vector<int>, std::vector<int>> topo_order(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> indeg(n, 0);
  for (const auto& e : adj)
    for (int k : e) ++indeg[k];
  std::priority_queue<int> ready;
  for (int m = 0; m < n; ++m)
    if (!indeg[m]) ready.push(m);
  std::vector<int> order;
  while (!ready.empty()) {
    int m = ready.top();
    ready.pop();
    order.push_back(m);
    for (int k : adj[m])
      if (--indeg[k] == 0) ready.push(k);
  }
  if (static_cast<int>(order.size()) == n) return {order, {}};
  // Walk backwards through unresolved nodes until one repeats.
  std::vector<std::vector<int>> radj(n);
  for (int m = 0; m < n; ++m)
    for (int k : adj[m])
      if (indeg[k] > 0 && indeg[m] > 0) radj[k].push_back(m);
  int cur = 0;
  while (indeg[cur] == 0) ++cur;
  std::vector<int> seen(n, -1), path;
  while (seen[cur] < 0) {
    seen[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    cur = radj[cur].front();
  }
  std::vector<int> cycle(path.begin() + seen[cur], path.end());
  std::reverse(cycle.begin(), cycle.end());
  return {{}, cycle};
}

std::string cycle_text(const MSpace& s, const std::vector<int>& cycle) {
  std::string t;
  for (int m : cycle) t += s.label(m) + " -> ";
  return t + s.label(cycle.front());
}

}  // namespace

IotaResult check_iota(const std::vector<MVector>& basis) {
  IotaResult r{{"iota", false, ""}, {}};
  if (basis.empty()) {
    r.check.witness = "empty basis";
    return r;
  }
  const MSpace& s = *basis[0].space();
  const int n = s.size();
  if (static_cast<int>(basis.size()) != n) {
    r.check.witness = "basis has " + std::to_string(basis.size()) + " vectors, M has " + std::to_string(n);
    return r;
  }
  std::vector<std::vector<int>> adj(n);  // pair -> basis vectors containing it
  for (int j = 0; j < n; ++j)
    for (const auto& [m, c] : basis[j].terms()) adj[m].push_back(j);
  std::vector<int> match_basis(n, -1), match_pair(n, -1);
  std::vector<int> visited(n, -1);
  std::function<bool(int, int)> augment = [&](int m, int stamp) {
    for (int j : adj[m]) {
      if (visited[j] == stamp) continue;
      visited[j] = stamp;
      if (match_basis[j] < 0 || augment(match_basis[j], stamp)) {
        match_basis[j] = m;
        match_pair[m] = j;
        return true;
      }
    }
    return false;
  };
  for (int m = 0; m < n; ++m)
    if (!augment(m, m)) {
      r.check.witness = "no perfect matching; " + s.label(m) + " cannot be assigned";
      return r;
    }
  auto [order, cycle] = topo_order(support_digraph(basis, match_pair));
  if (!cycle.empty()) {
    r.check.witness = "matching not unique; alternating cycle " + cycle_text(s, cycle);
    return r;
  }
  r.check.pass = true;
  r.iota = match_pair;
  return r;
}

TriangularResult check_triangular(const std::vector<MVector>& basis, const std::vector<int>& iota) {
  TriangularResult r{{"triangular", false, ""}, {}};
  if (iota.empty()) {
    r.check.witness = "no iota";
    return r;
  }
  const MSpace& s = *basis[0].space();
  auto [order, cycle] = topo_order(support_digraph(basis, iota));
  if (!cycle.empty()) {
    r.check.witness = "cycle " + cycle_text(s, cycle);
    return r;
  }
  for (std::size_t m = 0; m < iota.size(); ++m) {
    const MVector& b = basis[iota[m]];
    if (b.coeff(static_cast<int>(m)) != Cyclo(1)) {
      r.check.witness = "diagonal coefficient at " + s.label(static_cast<int>(m)) + " is " + b.coeff(static_cast<int>(m)).str();
      return r;
    }
    for (const auto& [k, c] : b.terms())
      if (!c.is_rational() || c.to_rational().den() != 1) {
        r.check.witness = "non-integer coefficient " + c.str() + " at " + s.label(k);
        return r;
      }
  }
  r.check.pass = true;
  r.order = order;
  return r;
}

Check check_independent(const std::vector<MVector>& basis) {
  Check c{"independent", false, ""};
  if (basis.empty()) return c;
  const int n = basis[0].space()->size();
  const std::int64_t p = 2147483647;  // 2^31 - 1
  auto mulmod = [&](std::int64_t a, std::int64_t b) { return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p); };
  auto powmod = [&](std::int64_t a, std::int64_t e) {
    std::int64_t r = 1;
    a %= p;
    for (; e; e >>= 1, a = mulmod(a, a))
      if (e & 1) r = mulmod(r, a);
    return r;
  };
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& b : basis) {
    std::vector<std::int64_t> row(n, 0);
    for (const auto& [m, v] : b.terms()) {
      if (!v.is_rational()) {
        c.witness = "irrational coefficient; exact rank not computed";
        return c;
      }
      Rational q = v.to_rational();
      std::int64_t num = ((q.num() % p) + p) % p;
      row[m] = mulmod(num, powmod(q.den() % p, p - 2));
    }
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    std::int64_t inv = powmod(rows[rank][col], p - 2);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      if (!rows[r][col]) continue;
      std::int64_t f = mulmod(rows[r][col], inv);
      for (int k = col; k < n; ++k)
        if (rows[rank][k]) rows[r][k] = ((rows[r][k] - mulmod(f, rows[rank][k])) % p + p) % p;
    }
    ++rank;
  }
  c.pass = rank == static_cast<int>(rows.size()) && rank == n;
  if (!c.pass) c.witness = "rank " + std::to_string(rank) + " of " + std::to_string(rows.size()) + " vectors in dimension " + std::to_string(n);
  return c;
}

std::vector<std::string> cuspidal_pairs(int n) {
  switch (n) {
    case 2: return {"(1,e)", "(g2,e)"};
    case 3: return {"(1,e)", "(g2,e)", "(g3,th)", "(g3,th2)"};
    case 4: return {"(1,l3)", "(g2,e)", "(g2',e)", "(g3,th)", "(g3,th2)", "(g4,i)", "(g4,-i)"};
    case 5:
      return {"(1,l4)", "(g2,-e)", "(g3,eth)", "(g3,eth2)", "(g2',e)", "(g6,-th)", "(g6,-th2)",
              "(g4,i)", "(g4,-i)", "(g5,z)", "(g5,z2)", "(g5,z3)", "(g5,z4)"};
    default: return {};
  }
}

std::vector<FixedPoint> check_fixed_points(const std::vector<MVector>& basis, const std::vector<int>& iota,
                                           const FourierMatrix& A, const std::vector<std::string>& pairs) {
  std::vector<FixedPoint> out;
  if (basis.empty() || iota.empty()) return out;
  const MSpace& s = *basis[0].space();
  for (const auto& p : pairs) {
    const MVector& b = basis[iota[s.find(p)]];
    out.push_back({p, A.apply(b) == b});
  }
  return out;
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["group"] = group;
  j["variant"] = variant;
  j["pass"] = pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  j["iota"] = iota;
  j["order"] = order;
  j["fixed_points"] = nlohmann::ordered_json::array();
  for (const auto& f : fixed_points) j["fixed_points"].push_back({{"pair", f.pair}, {"fixed", f.fixed}});
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream o;
  o << group << (variant == "standard" ? "" : " (" + variant + ")") << ": " << (pass() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    o << "  " << (c.pass ? "ok   " : "FAIL ") << c.name;
    if (!c.witness.empty()) o << "  [" << c.witness << "]";
    o << "\n";
  }
  if (!fixed_points.empty()) {
    o << "  fixed by A:";
    for (const auto& f : fixed_points) o << " " << f.pair << (f.fixed ? "" : "(no)");
    o << "\n";
  }
  return o.str();
}

VerificationReport verify_group(const std::string& descriptor, Variant variant, double tol) {
  VerificationReport rep;
  rep.group = descriptor;
  rep.variant = variant == Variant::Primed ? "primed" : "standard";
  GroupPtr g = build_standard(descriptor);
  auto elems = basis_beta(g, variant);
  std::vector<MVector> basis;
  for (const auto& e : elems) basis.push_back(e.vector);
  const MSpacePtr& space = basis.front().space();
  FourierMatrix A = FourierMatrix::build(space);

  rep.checks.push_back({"size", static_cast<int>(basis.size()) == space->size(),
                        std::to_string(basis.size()) + " vectors for |M| = " + std::to_string(space->size())});
  if (rep.checks.back().pass) rep.checks.back().witness.clear();
  rep.checks.push_back(check_bipositivity(basis, A, tol));
  auto io = check_iota(basis);
  rep.checks.push_back(io.check);
  auto tri = check_triangular(basis, io.iota);
  rep.checks.push_back(tri.check);
  rep.checks.push_back(check_independent(basis));
  for (int m : tri.order) {
    rep.order.push_back(space->label(m));
    rep.iota.push_back(space->label(m) + " <- " + elems[io.iota[m]].provenance);
  }
  if (g->kind() == Group::Kind::Permutation && g->degree() >= 2)
    rep.fixed_points = check_fixed_points(basis, io.iota, A, cuspidal_pairs(g->degree()));
  return rep;
}


// ---- interval and subspace families ------------------------------------------

namespace {

namespace cl = classical;

// Collects the first failure of a sweep as its witness.
struct Sweep {
  Check c;
  explicit Sweep(std::string name) { c.name = std::move(name), c.pass = true; }
  void expect(bool ok, const std::function<std::string()>& why) {
    if (ok || !c.pass) {
      if (!ok) c.pass = false;
      return;
    }
    c.pass = false;
    c.witness = why();
  }
};

std::string dtag(int d) { return "D=" + std::to_string(d); }

}  // namespace

std::vector<Check> check_classical_properties(int d) {
  std::vector<Check> out;
  const auto tag = " " + dtag(d);

  {
    Sweep s("lemma_2_9" + tag);
    if (d >= 2)
      for (int delta = 0; delta < 2; ++delta)
        for (const auto& lp : cl::family_c(d - 2, delta)) {
          auto shr = cl::shriek(lp, delta, d - 2);
          for (int i = 1; i <= d; ++i) {
            cl::Subspace ei = cl::Subspace::span({cl::Vec{1} << (i - 1)});
            cl::Subspace lhs = cl::t_embed_delta(i, 1 - delta, shr, d), rhs;
            if (i % 2 == delta) {
              rhs = cl::shriek(cl::t_embed_delta(i, delta, lp, d) + ei, delta, d);
            } else {
              lhs = lhs + ei;
              rhs = cl::shriek(cl::t_embed_delta(i, delta, lp, d), delta, d);
            }
            s.expect(lhs == rhs, [&] {
              return "delta=" + std::to_string(delta) + " i=" + std::to_string(i) + " L'=" + lp.str(d - 2);
            });
          }
        }
    out.push_back(s.c);
  }

  {
    Sweep s("prop_2_11" + tag);
    std::set<cl::Subspace> f(cl::family_f(d).begin(), cl::family_f(d).end());
    for (int delta = 0; delta < 2; ++delta) {
      std::set<cl::Subspace> img;
      for (const auto& p : cl::family_ctilde(d, delta)) img.insert(cl::alpha_map(p, delta, d));
      s.expect(img == f && img.size() == cl::family_ctilde(d, delta).size(), [&] {
        return "delta=" + std::to_string(delta) + ": " + std::to_string(cl::family_ctilde(d, delta).size()) +
               " pairs, " + std::to_string(img.size()) + " images, |F(V)| = " + std::to_string(f.size());
      });
    }
    out.push_back(s.c);
  }

  {
    Sweep s("prop_2_15" + tag);
    const auto& ss = cl::enumerate_family(cl::Family::SS, d);
    std::set<cl::IntervalSet> img;
    std::size_t count = 0;
    for (const auto& b : cl::enumerate_family(cl::Family::S, d)) {
      int m = d - 2 * static_cast<int>(b.size());
      for (int k = 0; 2 * k <= m; ++k, ++count) {
        auto bk = cl::b_of_k(b, k, d);
        img.insert(bk);
        auto back = cl::lambda_inverse(bk, d);
        s.expect(back.first == b && back.second == k,
                 [&] { return "inverse fails on " + cl::to_string(bk); });
      }
    }
    s.expect(img.size() == count && std::equal(img.begin(), img.end(), ss.begin(), ss.end()), [&] {
      return std::to_string(count) + " pairs (B,k), " + std::to_string(img.size()) + " images, |SS_D| = " +
             std::to_string(ss.size());
    });
    out.push_back(s.c);
  }

  {
    Sweep s("prop_2_17" + tag);
    std::set<cl::Subspace> ff(cl::family_ff(d).begin(), cl::family_ff(d).end());
    for (int delta = 0; delta < 2; ++delta) {
      auto triples = cl::family_ftilde(d, delta);
      std::set<cl::Subspace> img;
      for (const auto& t : triples) img.insert(cl::theta_217(t, delta, d));
      s.expect(img == ff && img.size() == triples.size(), [&] {
        return "delta=" + std::to_string(delta) + ": " + std::to_string(triples.size()) + " triples, " +
               std::to_string(img.size()) + " images";
      });
    }
    out.push_back(s.c);
  }

  {
    Sweep s("z_of_invariants" + tag);
    for (const auto& b : cl::enumerate_family(cl::Family::S, d)) {
      auto z = cl::z_of(b, d);
      const int m = d - 2 * static_cast<int>(b.size());
      auto why = [&](const char* what) { return [&, what] { return std::string(what) + " for B=" + cl::to_string(b); }; };
      s.expect(static_cast<int>(z.seq.size()) == m, why("|z(B)| != D-2|B|"));
      std::vector<cl::Vec> all;
      for (const auto& I : b) all.push_back(cl::e_interval(I));
      for (const auto& I : z.seq) all.push_back(cl::e_interval(I));
      auto sp = cl::Subspace::span(all);
      s.expect(sp.dim() == static_cast<int>(all.size()), why("dependent e_I"));
      s.expect(sp == cl::perp(cl::span_b(b), d), why("span of B and z(B) is not <B>^perp"));
      for (std::size_t a = 0; a < z.seq.size(); ++a)
        for (std::size_t c = 0; c < z.seq.size(); ++c) {
          int want = (a + 1 == c || c + 1 == a) ? 1 : 0;
          s.expect(cl::form(cl::e_interval(z.seq[a]), cl::e_interval(z.seq[c])) == want,
                   why("form on e_{I_a} is not the adjacency form"));
        }
      for (std::size_t a = 0; a + 1 < z.seq.size(); ++a)
        s.expect(z.seq[a + 1].a == z.seq[a].b + 1, why("I_1..I_M not consecutive"));
    }
    out.push_back(s.c);
  }

  {
    Sweep s("span_injective" + tag);
    auto image = [&](cl::Family k) {
      std::set<cl::Subspace> img;
      for (const auto& b : cl::enumerate_family(k, d)) img.insert(cl::span_b(b));
      return img;
    };
    auto fs = image(cl::Family::S), ffs = image(cl::Family::SS);
    s.expect(fs.size() == cl::enumerate_family(cl::Family::S, d).size() &&
                 std::equal(fs.begin(), fs.end(), cl::family_f(d).begin(), cl::family_f(d).end()),
             [] { return std::string("B -> <B> on S_D is not a bijection onto F(V)"); });
    s.expect(ffs.size() == cl::enumerate_family(cl::Family::SS, d).size() &&
                 std::equal(ffs.begin(), ffs.end(), cl::family_ff(d).begin(), cl::family_ff(d).end()),
             [] { return std::string("B -> <B> on SS_D is not a bijection onto bold F(V)"); });
    out.push_back(s.c);
  }

  {
    Sweep s("shriek_2_8" + tag);
    std::set<cl::Subspace> f(cl::family_f(d).begin(), cl::family_f(d).end());
    for (int delta = 0; delta < 2; ++delta) {
      const auto& other = cl::family_c(d, 1 - delta);
      std::set<cl::Subspace> co(other.begin(), other.end());
      for (const auto& l : cl::family_c(d, delta)) {
        auto sh = cl::shriek(l, delta, d);
        s.expect(co.count(sh) == 1, [&] { return "L^! not in C(V^{1-delta}) for L=" + l.str(d); });
        s.expect(f.count(l + sh) == 1, [&] { return "L + L^! not in F(V) for L=" + l.str(d); });
      }
    }
    out.push_back(s.c);
  }

  {
    Sweep s("cardinality" + tag);
    const auto& ff = cl::family_ff(d);
    s.expect(ff.size() == (std::size_t{1} << d), [&] {
      return "|bold F(V)| = " + std::to_string(ff.size()) + ", expected " + std::to_string(std::size_t{1} << d);
    });
    for (const auto& e : ff) s.expect(cl::is_isotropic(e), [&] { return "not isotropic: " + e.str(d); });
    out.push_back(s.c);
  }
  return out;
}

Check check_indicator_transform(int n) {
  Sweep s("indicator_transform V" + std::to_string(n));
  const int d = 2 * n;
  const MSpacePtr& sp = model("V" + std::to_string(n)).space;
  FourierMatrix A = FourierMatrix::build(sp);
  for (const auto& e : cl::family_ff(d)) {
    MVector v(sp), w(sp);
    for (cl::Vec x : e.elements()) v.add(cl::pair_of_vector(*sp, x, n, 0), Cyclo(1));
    for (cl::Vec x : cl::perp(e, d).elements()) w.add(cl::pair_of_vector(*sp, x, n, 0), Cyclo(1));
    Rational scale = e.dim() >= n ? Rational(std::int64_t{1} << (e.dim() - n))
                                  : Rational(1, std::int64_t{1} << (n - e.dim()));
    s.expect(A.apply(v) == w * Cyclo(scale), [&] { return "E=" + e.str(d); });
  }
  return s.c;
}

Check check_route_equivalence(int n, int delta) {
  Sweep s("route_equivalence V" + std::to_string(n) + " delta=" + std::to_string(delta));
  auto recursive = basis_beta(model("V" + std::to_string(n)).group);
  auto direct = cl::basis_beta_classical(n, delta);
  std::set<std::string> a, b;
  for (const auto& x : recursive) a.insert(x.vector.str());
  for (const auto& x : direct) b.insert(x.str());
  s.expect(a == b && a.size() == recursive.size() && b.size() == direct.size(), [&] {
    for (const auto& x : b)
      if (!a.count(x)) return "indicator " + x + " not produced by the recursion";
    for (const auto& x : a)
      if (!b.count(x)) return "recursion vector " + x + " is not an indicator of bold F(V)";
    return std::string("duplicate vectors");
  });
  return s.c;
}

}  // namespace bipos
