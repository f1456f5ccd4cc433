#include <random>

#include "bipos/exceptional.hpp"
#include "bipos/mspace.hpp"
#include "doctest.h"

using namespace bipos;

namespace {

MVector v(const std::string& group, const std::string& text) { return MVector::parse(space_for(group), text); }

MVector srow(int n, const std::string& lower, const std::string& upper, const std::string& xi) {
  return evaluate_row(GoldenRow{n, "", lower, upper, xi, std::nullopt});
}

}  // namespace

TEST_SUITE("mspace") {
  TEST_CASE("sizes") {
    CHECK(space_for("S1")->size() == 1);
    CHECK(space_for("S2")->size() == 4);
    CHECK(space_for("S3")->size() == 8);
    CHECK(space_for("S4")->size() == 21);
    CHECK(space_for("S5")->size() == 39);
    CHECK(space_for("V2")->size() == 16);
    CHECK(space_for("S3xS2")->size() == 32);
    CHECK(space_for("V1xS3")->size() == 4 * 8);
  }

  TEST_CASE("labels") {
    auto s = space_for("S5");
    for (const char* l : {"(1,l4)", "(g2,-e)", "(g3,eth2)", "(g2',e'')", "(g6,-th)", "(g4,-i)", "(g5,z3)", "(g2,-r)"})
      CHECK_NOTHROW(s->find(l));
    CHECK_THROWS_AS(s->find("(g7,1)"), std::invalid_argument);
    for (int m = 0; m < s->size(); ++m) CHECK(s->find(s->label(m)) == m);
  }

  TEST_CASE("vector text and json") {
    MVector a = v("S4", "(g2',e)+2(g2,e')+(1,l1)+1/2(1,s)");
    CHECK(MVector::parse(a.space(), a.str()) == a);
    CHECK(MVector::from_json(a.space(), a.to_json()) == a);
    MVector b = fourier(v("S5", "(g5,z)+(1,1)"));
    CHECK(MVector::from_json(b.space(), b.to_json()) == b);
  }

  TEST_CASE("pair functions") {
    auto s = space_for("S2");
    PairFunction f = to_pair_function(v("S2", "(1,1)"));
    const Group& g = *s->group();
    Elem t = 1;
    CHECK(f.at(0, 0) == Cyclo(1));
    CHECK(f.at(0, t) == Cyclo(1));
    CHECK(f.at(t, 0).is_zero());
    CHECK(f.at(t, t).is_zero());

    PairFunction one{s, std::vector<Cyclo>(s->num_commuting_pairs(), Cyclo(1))};
    CHECK(from_pair_function(one) == v("S2", "(g2,1)+(1,1)"));
    CHECK(g.order() == 2);
  }

  TEST_CASE("pair function round trip") {
    for (const char* d : {"S3", "S4", "S5", "V3", "S3xS2"}) {
      auto s = space_for(d);
      CAPTURE(d);
      for (int m = 0; m < s->size(); ++m) {
        MVector u = MVector::unit(s, m);
        PairFunction f = to_pair_function(u);
        CHECK(f.is_invariant());
        CHECK(from_pair_function(f) == u);
      }
    }
  }

  TEST_CASE("Fourier transform on S2") {
    CHECK(fourier(v("S2", "(1,1)")) == v("S2", "1/2(1,1)+1/2(1,e)+1/2(g2,1)+1/2(g2,e)"));
    MVector lam = v("S2", "(g2,e)+(1,1)");
    CHECK(fourier(lam) == lam);
    CHECK(fourier(fourier(v("S2", "(1,e)"))) == v("S2", "(1,e)"));
  }

  TEST_CASE("Fourier matrix is unitary") {
    for (const char* d : {"S1", "S2", "S3", "S4", "V2", "S2xS2", "S3xS2"}) {
      CAPTURE(d);
      CHECK(FourierMatrix::build(space_for(d)).is_unitary());
    }
  }

  TEST_CASE("F2 fast path agrees with the matrix") {
    auto s = space_for("V3");
    FourierMatrix A = FourierMatrix::build(s);
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> pick(0, s->size() - 1), c(-2, 3);
    for (int t = 0; t < 20; ++t) {
      MVector x(s);
      for (int k = 0; k < 5; ++k) x.add(pick(rng), Cyclo(c(rng)));
      MVector slow(s);
      for (const auto& [m, cm] : x.terms())
        for (int r = 0; r < s->size(); ++r)
          if (Cyclo e = A.entry(r, m); !e.is_zero()) slow.add(r, e * cm);
      CHECK(A.apply(x) == slow);
    }
  }

  TEST_CASE("Fourier of subspace indicators on V2") {
    auto s = space_for("V2");
    // <x1> as a subgroup with the trivial character: indicator of {(0,1),(x1,1)}
    MVector e = v("V2", "(0,1)+(x1,1)");
    MVector f = fourier(e);
    CHECK(f.terms().size() == 8);  // 2^{1-2} on the 8 points of E^perp
    for (const auto& [m, c] : f.terms()) CHECK(c == Cyclo(Rational(1, 2)));
    (void)s;
  }

  TEST_CASE("s-maps") {
    CHECK(srow(2, "S2", "S2", "1") == v("S2", "(g2,1)+(1,1)"));
    CHECK(srow(3, "S1", "S2", "1") == v("S3", "(1,r)+(1,1)"));
    CHECK(srow(3, "S1", "S1", "1") == v("S3", "(1,e)+2(1,r)+(1,1)"));
    CHECK(srow(4, "S1", "S2S2", "L[-1,1]") == v("S4", "(g2,e')+(1,s)+(1,l1)+(1,1)"));
    CHECK(srow(5, "S1", "S5", "1") == v("S5", "(1,1)"));
  }

  TEST_CASE("external products") {
    auto s2 = space_for("S2");
    const auto& p22 = model("S2xS2");
    MVector lam = v("S2", "(g2,e)+(1,1)"), one = v("S2", "(1,1)");
    CHECK(external_product(p22.space, lam, one) == prim_element("S2xS2", "L[-1,1]").vector);
    MVector lt = prim_element("S3xS2", "L[th,-1]").vector;
    CHECK(lt.terms().size() == 6);
    for (const auto& [m, c] : lt.terms()) CHECK(c == Cyclo(1));
    MVector unit = external_product(p22.space, one, one);
    REQUIRE(unit.terms().size() == 1);
    int id = s2->find("(1,1)");
    CHECK(unit.terms().begin()->first == p22.space->product_index({id, id}));
    // basis to basis
    for (int a = 0; a < s2->size(); ++a)
      for (int b = 0; b < s2->size(); ++b) {
        MVector w = external_product(p22.space, MVector::unit(s2, a), MVector::unit(s2, b));
        CHECK(w == MVector::unit(p22.space, p22.space->product_index({a, b})));
      }
  }

  TEST_CASE("product transform factors") {
    const auto& p = model("S3xS2");
    auto s3 = space_for("S3"), s2 = space_for("S2");
    MVector a = v("S3", "(g3,th)+(1,r)"), b = v("S2", "(g2,e)");
    CHECK(fourier(external_product(p.space, a, b)) == external_product(p.space, fourier(a), fourier(b)));
  }
}
