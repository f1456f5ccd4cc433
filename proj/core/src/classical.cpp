#include "bipos/classical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "bipos/exceptional.hpp"

namespace bipos::classical {

namespace {

void check_d(int d, int cap = kMaxD) {
  if (d < 0 || d % 2 != 0 || d > cap)
    throw std::invalid_argument("D must be even and in [0," + std::to_string(cap) + "], got " +
                                std::to_string(d));
}

void check_delta(int delta) {
  if (delta != 0 && delta != 1) throw std::invalid_argument("delta must be 0 or 1");
}

}  // namespace

// ---- intervals -------------------------------------------------------------

IntervalSet normalize(IntervalSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::string to_string(const IntervalSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += "[" + std::to_string(s[i].a) + "," + std::to_string(s[i].b) + "]";
  }
  return out + "}";
}

// Accepts "{[3,5],[4,4],[7]}"; "[7]" is the singleton [7,7].
IntervalSet parse_intervals(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.size() < 2 || t.front() != '{' || t.back() != '}')
    throw std::invalid_argument("interval set must look like {[a,b],...}: " + text);
  IntervalSet out;
  std::size_t p = 1;
  while (p < t.size() - 1) {
    if (t[p] != '[') throw std::invalid_argument("expected '[' in " + text);
    auto close = t.find(']', p);
    if (close == std::string::npos) throw std::invalid_argument("unbalanced '[' in " + text);
    std::string body = t.substr(p + 1, close - p - 1);
    auto comma = body.find(',');
    Interval iv;
    try {
      iv.a = std::stoi(body.substr(0, comma));
      iv.b = comma == std::string::npos ? iv.a : std::stoi(body.substr(comma + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad interval [" + body + "]");
    }
    if (iv.a < 1 || iv.b < iv.a) throw std::invalid_argument("bad interval [" + body + "]");
    out.push_back(iv);
    p = close + 1;
    if (p < t.size() - 1) {
      if (t[p] != ',') throw std::invalid_argument("expected ',' in " + text);
      ++p;
    }
  }
  return normalize(std::move(out));
}

Interval xi_embed(int i, Interval ip, int d) {
  if (i < 1 || i > d) throw std::invalid_argument("xi_embed: i out of range");
  if (ip.b <= i - 2) return ip;
  if (ip.a >= i) return {ip.a + 2, ip.b + 2};
  return {ip.a, ip.b + 2};  // a <= i-1 <= b
}

IntervalSet t_insert(int i, const IntervalSet& bp, int d) {
  IntervalSet out{{i, i}};
  for (const auto& I : bp) out.push_back(xi_embed(i, I, d));
  return normalize(std::move(out));
}

IntervalSet primitive(int d, int k) {
  IntervalSet out;
  for (int j = 1; j <= k; ++j) out.push_back({j, d + 1 - j});
  return normalize(std::move(out));
}

const std::vector<IntervalSet>& enumerate_family(Family kind, int d) {
  check_d(d);
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, std::vector<IntervalSet>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto key = std::make_pair(static_cast<int>(kind), d);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::set<IntervalSet> out;
  if (kind != Family::S)
    for (int k = 0; k <= d / 2; ++k) out.insert(primitive(d, k));
  else
    out.insert(IntervalSet{});
  if (kind != Family::SSPrim && d >= 2)
    for (const auto& bp : enumerate_family(kind, d - 2))
      for (int i = 1; i <= d; ++i) out.insert(t_insert(i, bp, d));
  return cache[key] = std::vector<IntervalSet>(out.begin(), out.end());
}

// ---- V ---------------------------------------------------------------------

Vec full_mask(int d) { return d >= 32 ? ~Vec{0} : (Vec{1} << d) - 1; }

Vec parity_mask(int d, int delta) {
  Vec m = 0;
  for (int i = 1; i <= d; ++i)
    if (i % 2 == delta) m |= Vec{1} << (i - 1);
  return m;
}

Vec e_interval(const Interval& I) {
  Vec v = 0;
  for (int i = I.a; i <= I.b; ++i) v |= Vec{1} << (i - 1);
  return v;
}

int form(Vec x, Vec y) { return std::popcount(x & ((y << 1) ^ (y >> 1))) & 1; }

Subspace Subspace::span(const std::vector<Vec>& vectors) {
  std::vector<Vec> rows;
  for (Vec v : vectors) {
    for (Vec r : rows)
      if (v & std::bit_floor(r)) v ^= r;
    if (!v) continue;
    Vec lead = std::bit_floor(v);
    for (Vec& r : rows)
      if (r & lead) r ^= v;
    rows.push_back(v);
  }
  std::sort(rows.begin(), rows.end(), std::greater<>());
  Subspace s;
  s.rows_ = std::move(rows);
  return s;
}

bool Subspace::contains(Vec v) const {
  for (Vec r : rows_)
    if (v & std::bit_floor(r)) v ^= r;
  return v == 0;
}

std::vector<Vec> Subspace::elements() const {
  std::vector<Vec> out;
  const auto n = rows_.size();
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    Vec v = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (c >> j & 1) v ^= rows_[j];
    out.push_back(v);
  }
  return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
  std::vector<Vec> all = rows_;
  all.insert(all.end(), o.rows_.begin(), o.rows_.end());
  return span(all);
}

std::string Subspace::str(int d) const {
  std::string out = "<";
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    if (j) out += ',';
    for (int i = 1; i <= d; ++i) out += (rows_[j] >> (i - 1) & 1) ? '1' : '0';
  }
  return out + ">";
}

Subspace annihilator(const Subspace& s, Vec ambient) {
  // Null space of the rows (e_i -> (e_i, z)) restricted to the ambient coordinates.
  std::vector<Vec> eqs;
  for (Vec z : s.rows()) eqs.push_back(((z << 1) ^ (z >> 1)) & ambient);
  auto red = Subspace::span(eqs).rows();
  Vec pivots = 0;
  for (Vec r : red) pivots |= std::bit_floor(r);
  std::vector<Vec> basis;
  for (Vec free = ambient & ~pivots; free; free &= free - 1) {
    Vec f = free & -free;
    Vec x = f;
    for (Vec r : red)
      if (r & f) x |= std::bit_floor(r);
    basis.push_back(x);
  }
  return Subspace::span(basis);
}

Subspace perp(const Subspace& s, int d) { return annihilator(s, full_mask(d)); }

Subspace shriek(const Subspace& z, int delta, int d) {
  check_delta(delta);
  for (Vec r : z.rows())
    if (r & ~parity_mask(d, delta)) throw std::invalid_argument("shriek: subspace not inside V^delta");
  return annihilator(z, parity_mask(d, 1 - delta));
}

bool is_isotropic(const Subspace& s) {
  const auto& r = s.rows();
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (form(r[i], r[j])) return false;
  return true;
}

Subspace span_b(const IntervalSet& b) {
  std::vector<Vec> v;
  for (const auto& I : b) v.push_back(e_interval(I));
  return Subspace::span(v);
}

Vec t_embed(int i, Vec x, int d) {
  Vec out = 0;
  for (int k = 1; k <= d - 2; ++k) {
    if (!(x >> (k - 1) & 1)) continue;
    if (k <= i - 2)
      out ^= Vec{1} << (k - 1);
    else if (k >= i)
      out ^= Vec{1} << (k + 1);
    else  // k = i-1, 1 < i < D
      out ^= e_interval({i - 1, i + 1});
  }
  return out;
}

Vec t_embed_delta(int i, int delta, Vec x, int d) {
  Vec out = 0;
  for (int k = 1; k <= d - 2; ++k) {
    if (!(x >> (k - 1) & 1)) continue;
    if (k % 2 != delta) throw std::invalid_argument("t_embed_delta: vector not in V'^delta");
    if (k <= i - 2)
      out ^= Vec{1} << (k - 1);
    else if (k >= i)
      out ^= Vec{1} << (k + 1);
    else
      out ^= (Vec{1} << (i - 2)) | (Vec{1} << i);  // e_{i-1} + e_{i+1}
  }
  return out;
}

Subspace t_embed(int i, const Subspace& s, int d) {
  std::vector<Vec> v;
  for (Vec r : s.rows()) v.push_back(t_embed(i, r, d));
  return Subspace::span(v);
}

Subspace t_embed_delta(int i, int delta, const Subspace& s, int d) {
  std::vector<Vec> v;
  for (Vec r : s.rows()) v.push_back(t_embed_delta(i, delta, r, d));
  return Subspace::span(v);
}

int kappa(const Interval& I) {
  if (!I.odd()) throw std::invalid_argument("kappa: interval of even length");
  return I.a % 2;
}

std::pair<Subspace, Subspace> delta_split(const Subspace& e, int d) {
  // E^delta = E meet V^delta: eliminate the other parity's coordinates.
  auto part = [&](int delta) {
    Vec other = parity_mask(d, 1 - delta);
    std::vector<Vec> rows = e.rows();
    std::vector<Vec> kept;
    // Gaussian elimination on the "other" coordinates first.
    for (Vec bit = other; bit; bit &= bit - 1) {
      Vec f = bit & -bit;
      auto it = std::find_if(rows.begin(), rows.end(), [&](Vec r) { return r & f; });
      if (it == rows.end()) continue;
      Vec piv = *it;
      rows.erase(it);
      for (Vec& r : rows)
        if (r & f) r ^= piv;
    }
    for (Vec r : rows)
      if (r) kept.push_back(r);
    return Subspace::span(kept);
  };
  return {part(0), part(1)};
}

// ---- families of subspaces ---------------------------------------------------

namespace {

template <class T>
std::vector<T> to_vector(const std::set<T>& s) {
  return std::vector<T>(s.begin(), s.end());
}

}  // namespace

const std::vector<Subspace>& family_f(int d) {
  check_d(d);
  static std::recursive_mutex mu;
  static std::map<int, std::vector<Subspace>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::set<Subspace> out{Subspace{}};
  if (d >= 2)
    for (const auto& ep : family_f(d - 2))
      for (int i = 1; i <= d; ++i) out.insert(t_embed(i, ep, d) + Subspace::span({Vec{1} << (i - 1)}));
  return cache[d] = to_vector(out);
}

const std::vector<Subspace>& family_ff(int d) {
  check_d(d);
  static std::recursive_mutex mu;
  static std::map<int, std::vector<Subspace>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  std::set<Subspace> out;
  for (int k = 0; k <= d / 2; ++k) out.insert(span_b(primitive(d, k)));
  if (d >= 2)
    for (const auto& ep : family_ff(d - 2))
      for (int i = 1; i <= d; ++i) out.insert(t_embed(i, ep, d) + Subspace::span({Vec{1} << (i - 1)}));
  return cache[d] = to_vector(out);
}

const std::vector<Subspace>& family_c(int d, int delta) {
  check_d(d);
  check_delta(delta);
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, std::vector<Subspace>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find({d, delta}); it != cache.end()) return it->second;
  std::set<Subspace> out;
  if (d == 0) out.insert(Subspace{});
  else
    for (const auto& lp : family_c(d - 2, delta))
      for (int i = 1; i <= d; ++i) {
        Subspace s = t_embed_delta(i, delta, lp, d);
        if (i % 2 == delta) s = s + Subspace::span({Vec{1} << (i - 1)});
        out.insert(s);
      }
  return cache[{d, delta}] = to_vector(out);
}

const std::vector<LPair>& family_ctilde(int d, int delta) {
  check_d(d);
  check_delta(delta);
  static std::recursive_mutex mu;
  static std::map<std::pair<int, int>, std::vector<LPair>> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  if (auto it = cache.find({d, delta}); it != cache.end()) return it->second;
  std::set<LPair> out;
  out.insert({Subspace{}, annihilator(Subspace{}, parity_mask(d, delta))});  // 0 in V^delta
  if (d >= 2)
    for (const auto& p : family_ctilde(d - 2, delta))
      for (int i = 1; i <= d; ++i) {
        LPair q{t_embed_delta(i, delta, p.l1, d), t_embed_delta(i, delta, p.l2, d)};
        if (i % 2 == delta) {
          Subspace ei = Subspace::span({Vec{1} << (i - 1)});
          q.l1 = q.l1 + ei;
          q.l2 = q.l2 + ei;
        }
        out.insert(q);
      }
  return cache[{d, delta}] = to_vector(out);
}

Subspace alpha_map(const LPair& p, int delta, int d) { return p.l1 + shriek(p.l2, delta, d); }

// ---- z(B) --------------------------------------------------------------------

ZDecomposition z_of(const IntervalSet& b, int d) {
  if (d < 0 || d % 2) throw std::invalid_argument("z_of: D must be even and non-negative");
  for (const auto& I : b) {
    if (I.a < 1 || I.b > d) throw std::invalid_argument("z_of: interval outside [1,D]");
    if (!I.odd()) throw std::invalid_argument("z_of: B has an interval of even length");
  }
  // Blocks [a_i, b_i]: the maximal runs of the union of B.
  std::vector<char> cov(d + 2, 0);
  for (const auto& I : b)
    for (int i = I.a; i <= I.b; ++i) cov[i] = 1;
  std::vector<int> as{0}, bs{-1};  // 1-based; bs[0] = b_0 = -1
  for (int i = 1; i <= d; ++i) {
    if (cov[i] && !cov[i - 1]) as.push_back(i);
    if (cov[i] && !cov[i + 1]) bs.push_back(i);
  }
  const int s = static_cast<int>(as.size()) - 1;
  as.push_back(d + 2);  // a_{s+1}

  ZDecomposition z;
  std::vector<int> jset;
  for (int i = 1; i <= s + 1; ++i) {
    int gap = as[i] - bs[i - 1];
    if (gap >= 3) jset.push_back(i);
    if (gap >= 4)
      for (int p = bs[i - 1] + 2; p <= as[i] - 2; ++p) z.z1.push_back({p, p});
  }
  // z'': [a_{i_u} - 1, b_{i_{u+1} - 1} + 1] for consecutive members of J.
  for (std::size_t u = 0; u + 1 < jset.size(); ++u)
    z.z2.push_back({as[jset[u]] - 1, bs[jset[u + 1] - 1] + 1});

  z.seq = z.z1;
  z.seq.insert(z.seq.end(), z.z2.begin(), z.z2.end());
  std::sort(z.seq.begin(), z.seq.end());
  if (!z.seq.empty()) {
    z.c.push_back(z.seq.front().a);
    for (const auto& I : z.seq) z.c.push_back(I.size());
  }
  return z;
}

IntervalSet b_of_k(const IntervalSet& b, int k, int d) {
  auto z = z_of(b, d);
  const int m = static_cast<int>(z.seq.size());
  if (k < 0 || 2 * k > m)
    throw std::invalid_argument("b_of_k: k must be in [0," + std::to_string(m / 2) + "]");
  IntervalSet out = b;
  for (int j = 1; j <= k; ++j) out.push_back({z.seq[j - 1].a, z.seq[m - j].b});
  return normalize(std::move(out));
}

std::pair<IntervalSet, int> lambda_inverse(const IntervalSet& bhat, int d) {
  IntervalSet b;
  for (const auto& I : bhat)
    if (I.odd()) b.push_back(I);
  int k = static_cast<int>(bhat.size() - b.size());
  IntervalSet back;
  try {
    back = b_of_k(b, k, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("lambda_inverse: " + to_string(bhat) + " is not of the form B(k)");
  }
  if (back != normalize(bhat))
    throw std::invalid_argument("lambda_inverse: " + to_string(bhat) + " is not of the form B(k)");
  return {b, k};
}

QuotientBasis quotient_symplectic_basis(const IntervalSet& b, int d) {
  QuotientBasis q;
  q.e = span_b(b);
  q.eperp = perp(q.e, d);
  for (const auto& I : z_of(b, d).seq) q.lifts.push_back(e_interval(I));
  return q;
}

const IntervalSet& b_of_subspace(const Subspace& e, int d) {
  static std::mutex mu;
  static std::map<int, std::map<Subspace, IntervalSet>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& m = cache[d];
  if (m.empty())
    for (const auto& b : enumerate_family(Family::S, d)) m.emplace(span_b(b), b);
  auto it = m.find(e);
  if (it == m.end()) throw std::invalid_argument("b_of_subspace: subspace is not in F(V)");
  return it->second;
}

std::vector<FTriple> family_ftilde(int d, int delta) {
  std::vector<FTriple> out;
  for (const auto& p : family_ctilde(d, delta)) {
    int m = 2 * (p.l2.dim() - p.l1.dim());
    for (int k = 0; 2 * k <= m; ++k) out.push_back({p, k});
  }
  return out;
}

Subspace theta_217(const FTriple& t, int delta, int d) {
  Subspace e = alpha_map(t.pair, delta, d);
  const IntervalSet& b = b_of_subspace(e, d);
  auto z = z_of(b, d);
  const int m = static_cast<int>(z.seq.size());
  if (t.k < 0 || 2 * t.k > m) throw std::invalid_argument("theta_217: no such primitive subspace");
  std::vector<Vec> lifts;
  for (int j = 1; j <= t.k; ++j) lifts.push_back(e_interval({z.seq[j - 1].a, z.seq[m - j].b}));
  return e + Subspace::span(lifts);
}

// ---- indicators in C[M(V_n)] --------------------------------------------------

int pair_of_vector(const MSpace& space, Vec v, int n, int delta) {
  const int d = 2 * n;
  Elem x = 0;
  int w = 0;
  for (int i = 1; i <= n; ++i) {
    int pos = delta == 0 ? 2 * i : d - (2 * i - 1);
    Vec e = Vec{1} << (pos - 1);
    if (v & e) x |= 1 << (i - 1);
    if (form(v, e)) w |= 1 << (i - 1);
  }
  return space.index(space.class_of(x), w);
}

std::vector<MVector> basis_beta_classical(int n, int delta) {
  check_delta(delta);
  if (n < 0 || 2 * n > kMaxD) throw std::invalid_argument("basis_beta_classical: n out of range");
  const MSpacePtr& s = model("V" + std::to_string(n)).space;
  std::vector<MVector> out;
  for (const auto& e : family_ff(2 * n)) {
    MVector v(s);
    for (Vec x : e.elements()) v.add(pair_of_vector(*s, x, n, delta), Cyclo(1));
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace bipos::classical
