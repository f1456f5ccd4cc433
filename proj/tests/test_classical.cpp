#include <algorithm>
#include <random>
#include <set>

#include "bipos/classical.hpp"
#include "bipos/exceptional.hpp"
#include "bipos/verify.hpp"
#include "doctest.h"

using namespace bipos::classical;
using bipos::Check;

namespace {

IntervalSet iv(const char* s) { return parse_intervals(s); }

std::string zs(const char* b, int d) {
  auto z = z_of(iv(b), d);
  return to_string(IntervalSet(z.seq.begin(), z.seq.end()));
}

}  // namespace

TEST_SUITE("classical") {
  TEST_CASE("interval literals") {
    CHECK(to_string(iv("{[3,5],[4,4],[8,10],[9,9]}")) == "{[3,5],[4,4],[8,10],[9,9]}");
    CHECK(iv("{[9],[3,5]}") == IntervalSet{{3, 5}, {9, 9}});
    CHECK(iv("{}").empty());
    CHECK_THROWS_AS(iv("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(iv("{[3,1]}"), std::invalid_argument);
    CHECK_THROWS_AS(iv("{[a,b]}"), std::invalid_argument);
  }

  TEST_CASE("xi and t") {
    CHECK(xi_embed(2, {1, 1}, 4) == Interval{1, 3});
    CHECK(xi_embed(1, {2, 3}, 6) == Interval{4, 5});
    CHECK(xi_embed(5, {1, 2}, 6) == Interval{1, 2});
    CHECK(t_insert(1, {}, 2) == IntervalSet{{1, 1}});
    CHECK(t_insert(1, {{1, 1}}, 4) == IntervalSet{{1, 1}, {3, 3}});
    std::mt19937 rng(3);
    for (int t = 0; t < 500; ++t) {
      int d = 2 * std::uniform_int_distribution<int>(1, 6)(rng);
      const auto& fam = enumerate_family(Family::SS, d - 2);
      const auto& bp = fam[std::uniform_int_distribution<std::size_t>(0, fam.size() - 1)(rng)];
      int i = std::uniform_int_distribution<int>(1, d)(rng);
      CHECK(t_insert(i, bp, d).size() == bp.size() + 1);
    }
  }

  TEST_CASE("families of interval sets") {
    CHECK(enumerate_family(Family::S, 2) == std::vector<IntervalSet>{{}, {{1, 1}}, {{2, 2}}});
    auto ss2 = enumerate_family(Family::SS, 2);
    CHECK(ss2.size() == 4);
    CHECK(std::count(ss2.begin(), ss2.end(), IntervalSet{{1, 2}}) == 1);
    const auto& s10 = enumerate_family(Family::S, 10);
    CHECK(std::count(s10.begin(), s10.end(), iv("{[3,5],[4,4],[8,10],[9,9]}")) == 1);
    CHECK(enumerate_family(Family::SSPrim, 6).size() == 4);
    CHECK(enumerate_family(Family::SS, 16).size() == 65536);
    CHECK_THROWS_AS(enumerate_family(Family::S, 18), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_family(Family::S, 5), std::invalid_argument);
  }

  TEST_CASE("spans and maps on V") {
    for (int d = 2; d <= 10; d += 2)
      for (const auto& b : enumerate_family(Family::SS, d)) CHECK(span_b(b).dim() == static_cast<int>(b.size()));
    CHECK(kappa({3, 5}) == 1);
    CHECK(kappa({2, 2}) == 0);
    CHECK_THROWS_AS(kappa({2, 3}), std::invalid_argument);

    std::mt19937 rng(5);
    for (int t = 0; t < 200; ++t) {
      int d = 2 * std::uniform_int_distribution<int>(1, 8)(rng);
      int i = std::uniform_int_distribution<int>(1, d)(rng);
      Vec x = std::uniform_int_distribution<Vec>(0, full_mask(d - 2))(rng);
      Vec y = std::uniform_int_distribution<Vec>(0, full_mask(d - 2))(rng);
      CHECK(form(x, y) == form(t_embed(i, x, d), t_embed(i, y, d)));
    }
    // T_i(e'_{i-1}) = e_{i-1} + e_i + e_{i+1}; T_i^delta(e'_{i-1}) = e_{i-1} + e_{i+1}
    CHECK(t_embed(3, Vec{0b10}, 6) == Vec{0b1110});
    CHECK(t_embed_delta(3, 0, Vec{0b10}, 6) == Vec{0b1010});
  }

  TEST_CASE("delta split of F(V)") {
    for (int d = 2; d <= 10; d += 2)
      for (const auto& e : family_f(d)) {
        auto [e0, e1] = delta_split(e, d);
        CHECK(e0 + e1 == e);
        CHECK(e0.dim() + e1.dim() == e.dim());
        std::vector<Vec> b0, b1;
        // 2.5(a): basis e_{I^delta} over I with kappa(I) = delta
        for (const auto& I : b_of_subspace(e, d)) {
          int k = kappa(I);
          (k == 0 ? b0 : b1).push_back(e_interval(I) & parity_mask(d, k));
        }
        CHECK(e0 == Subspace::span(b0));
        CHECK(e1 == Subspace::span(b1));
      }
  }

  TEST_CASE("subspace families") {
    auto ff2 = family_ff(2);
    std::set<Subspace> want{Subspace{}, Subspace::span({1}), Subspace::span({2}), Subspace::span({3})};
    CHECK(std::set<Subspace>(ff2.begin(), ff2.end()) == want);
    for (int d = 0; d <= 12; d += 2) {
      std::set<Subspace> ff(family_ff(d).begin(), family_ff(d).end());
      for (const auto& e : family_f(d)) CHECK(ff.count(e) == 1);
      for (const auto& e : ff) CHECK(is_isotropic(e));
      CHECK(ff.size() == (std::size_t{1} << d));
    }
  }

  TEST_CASE("alpha") {
    for (int delta = 0; delta < 2; ++delta) {
      const auto& ct = family_ctilde(6, delta);
      LPair base{Subspace{}, annihilator(Subspace{}, parity_mask(6, delta))};
      REQUIRE(std::count(ct.begin(), ct.end(), base) == 1);
      CHECK(alpha_map(base, delta, 6) == Subspace{});
    }
  }

  TEST_CASE("z(B) worked examples") {
    CHECK(zs("{[3,5],[4,4],[8,10],[9,9]}", 10) == "{[1,1],[2,6]}");
    CHECK(zs("{[2,4],[3,3],[8,10],[8,8]}", 10) == "{[1,5],[6,6]}");
    CHECK(zs("{[2,4],[3],[6,8],[7]}", 10) == "{[1,9],[10,10]}");
    CHECK(zs("{[4,6],[5],[9,11],[10],[15,17],[16]}", 20) ==
          "{[1,1],[2,2],[3,7],[8,12],[13,13],[14,18],[19,19],[20,20]}");
    auto z = z_of(iv("{[4,6],[5],[9,11],[10],[15,17],[16]}"), 20);
    CHECK(to_string(z.z1) == "{[1,1],[2,2],[13,13],[19,19],[20,20]}");
    CHECK(to_string(z.z2) == "{[3,7],[8,12],[14,18]}");
    CHECK(z.c == std::vector<int>{1, 1, 1, 5, 5, 1, 5, 1, 1});
    CHECK_THROWS_AS(z_of(iv("{[1,2]}"), 4), std::invalid_argument);
  }

  TEST_CASE("B(k)") {
    for (int d = 0; d <= 10; d += 2)
      for (int k = 0; k <= d / 2; ++k) CHECK(b_of_k({}, k, d) == primitive(d, k));
    CHECK(b_of_k(iv("{[3,5],[4,4],[8,10],[9,9]}"), 1, 10) == iv("{[1,6],[3,5],[4,4],[8,10],[9,9]}"));
    CHECK_THROWS_AS(b_of_k(iv("{[3,5],[4,4],[8,10],[9,9]}"), 2, 10), std::invalid_argument);
  }

  TEST_CASE("lambda inverse") {
    auto one = lambda_inverse(iv("{[1,1]}"), 2);
    CHECK(one.first == iv("{[1,1]}"));
    CHECK(one.second == 0);
    auto prim = lambda_inverse(iv("{[1,4],[2,3]}"), 4);
    CHECK(prim.first.empty());
    CHECK(prim.second == 2);
    CHECK_THROWS_AS(lambda_inverse(iv("{[2,3]}"), 4), std::invalid_argument);
    for (int d = 0; d <= 12; d += 2)
      for (const auto& bh : enumerate_family(Family::SS, d)) {
        auto [b, k] = lambda_inverse(bh, d);
        CHECK(b_of_k(b, k, d) == bh);
      }
  }

  TEST_CASE("quotient basis") {
    auto q0 = quotient_symplectic_basis({}, 6);
    CHECK(q0.lifts == std::vector<Vec>{1, 2, 4, 8, 16, 32});
    CHECK(q0.eperp.dim() == 6);
    for (const auto& b : enumerate_family(Family::S, 10)) {
      auto q = quotient_symplectic_basis(b, 10);
      CHECK(q.eperp.dim() - q.e.dim() == 10 - 2 * static_cast<int>(b.size()));
      for (std::size_t a = 0; a < q.lifts.size(); ++a)
        for (std::size_t c = 0; c < q.lifts.size(); ++c)
          CHECK(form(q.lifts[a], q.lifts[c]) == ((a + 1 == c || c + 1 == a) ? 1 : 0));
    }
  }

  TEST_CASE("Prop 2.17 and indicator bases") {
    for (int d = 0; d <= 10; d += 2)
      for (int delta = 0; delta < 2; ++delta) {
        std::set<Subspace> img;
        auto ft = family_ftilde(d, delta);
        for (const auto& t : ft) img.insert(theta_217(t, delta, d));
        CHECK(img.size() == ft.size());
        CHECK(std::equal(img.begin(), img.end(), family_ff(d).begin(), family_ff(d).end()));
      }
    FTriple bad{family_ctilde(4, 0).front(), 7};
    CHECK_THROWS_AS(theta_217(bad, 0, 4), std::invalid_argument);

    // beta(V1) = indicators of 0, <e1>, <e2>, <e1+e2>, which is the S2 table.
    auto b = basis_beta_classical(1);
    std::set<std::string> got;
    for (const auto& v : b) got.insert(v.str());
    CHECK(got == std::set<std::string>{"(0,1)", "(0,1) + (0,[1])", "(0,1) + (x1,1)", "(0,1) + (x1,[1])"});
  }

  TEST_CASE("sweeps at small D") {
    for (int d = 0; d <= 8; d += 2)
      for (const Check& c : bipos::check_classical_properties(d)) {
        CAPTURE(c.name);
        CAPTURE(c.witness);
        CHECK(c.pass);
      }
    for (int n = 1; n <= 3; ++n) {
      CHECK(bipos::check_indicator_transform(n).pass);
      CHECK(bipos::check_route_equivalence(n, 0).pass);
      CHECK(bipos::check_route_equivalence(n, 1).pass);
    }
  }
}
