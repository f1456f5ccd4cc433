#include <algorithm>

#include "bipos/chartable.hpp"
#include "bipos/exceptional.hpp"
#include "bipos/group.hpp"
#include "doctest.h"

using namespace bipos;

namespace {

bool subset(const ElemSet& a, const ElemSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("standard groups") {
    auto s3 = build_standard("S3");
    CHECK(s3->order() == 6);
    CHECK(conjugacy_classes(*s3).size() == 3);
    auto v2 = build_standard("V2");
    CHECK(v2->order() == 4);
    for (Elem a = 0; a < v2->order(); ++a) CHECK(v2->mul(a, a) == 0);
    CHECK(build_standard("S3xS2")->order() == 12);
    CHECK(build_standard("V2xS5")->order() == 480);
    CHECK(Group::symmetric(4) == build_standard("S4"));  // cached
    CHECK_THROWS_AS(build_standard("S6"), std::invalid_argument);
    CHECK_THROWS_AS(build_standard("Q8"), std::invalid_argument);
  }

  TEST_CASE("conjugacy data") {
    auto s5 = Group::symmetric(5);
    CHECK(conjugacy_classes(*s5).size() == 7);
    Elem t = *s5->find_perm(perm_from_cycles(5, {{1, 2}}));
    CHECK(centralizer(*s5, t).size() == 12);
    auto v2 = Group::f2space(2);
    auto cc = conjugacy_classes(*v2);
    CHECK(cc.size() == 4);
    for (const auto& c : cc) CHECK(c.members.size() == 1);
  }

  TEST_CASE("subgroup lattice of S5") {
    const auto& x = x_lattice(5);
    CHECK(x.members.size() == 8);
    CHECK(x.at("S3S2").members.size() == 12);
    CHECK(x.at("D8").members.size() == 8);
    CHECK(x.at("S2S2").members.size() == 4);
    CHECK(x.at("S3").members.size() == 6);
    CHECK(x.at("S4").members.size() == 24);
    CHECK(x.at("S2S2").members == intersect(x.at("S3S2").members, x.at("D8").members));
    CHECK(subset(x.at("S2").members, x.at("S2S2").members));
    CHECK(subset(x.at("S3").members, x.at("S3S2").members));
    for (const auto& s : x.members) CHECK(is_subgroup(*x.group, s.members));
  }

  TEST_CASE("subgroup lattice of S4 and S3") {
    const auto& x = x_lattice(4);
    CHECK(x.at("S2S2").members.size() == 4);
    CHECK(x.at("D8").members.size() == 8);
    CHECK(subset(x.at("S2").members, x.at("S2S2").members));
    CHECK(subset(x.at("S2S2").members, x.at("D8").members));
    CHECK(x.at("S3").members.size() == 6);
    CHECK(x_lattice(3).at("S2").members.size() == 2);
  }

  TEST_CASE("character tables") {
    auto s2 = Group::symmetric(2);
    auto t2 = character_table(*s2);
    REQUIRE(t2.size() == 2);
    int e = t2.labels[0] == "e" ? 0 : 1;
    CHECK(t2.values[e][1] == Cyclo(-1));

    auto t3 = character_table(*Group::symmetric(3));
    std::vector<std::int64_t> dims;
    for (int c = 0; c < t3.size(); ++c) dims.push_back(t3.degree(c).num());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::int64_t>{1, 1, 2});
    auto r = std::find(t3.labels.begin(), t3.labels.end(), "r");
    REQUIRE(r != t3.labels.end());
    CHECK(t3.degree(static_cast<int>(r - t3.labels.begin())) == Rational(2));

    auto c5 = Group::permutation("C5", 5, {perm_from_cycles(5, {{1, 2, 3, 4, 5}})});
    auto t5 = character_table(*c5);
    REQUIRE(t5.size() == 5);
    Elem g = *c5->find_perm(perm_from_cycles(5, {{1, 2, 3, 4, 5}}));
    std::vector<Cyclo> vals;
    for (int c = 0; c < 5; ++c) vals.push_back(t5.values[c][g]);
    for (int j = 0; j < 5; ++j)
      CHECK(std::find(vals.begin(), vals.end(), Cyclo::root_of_unity(5, j)) != vals.end());
  }

  TEST_CASE("orthogonality") {
    for (const char* d : {"S1", "S2", "S3", "S4", "S5", "V1", "V3", "S3xS2", "S2xS2"}) {
      auto g = build_standard(d);
      CAPTURE(d);
      CHECK(check_orthogonality(*g, character_table(*g)));
    }
    const auto& x = x_lattice(5);
    for (const auto& s : x.members) {
      auto e = as_group(*x.group, s.members, s.name);
      CAPTURE(s.name);
      CHECK(check_orthogonality(*e.group, character_table(*e.group)));
    }
  }

  TEST_CASE("Murnaghan-Nakayama") {
    CHECK(sn_character({3, 2}, {1, 1, 1, 1, 1}) == 5);
    CHECK(sn_character({3, 1, 1}, {2, 2, 1}) == -2);
    CHECK(sn_character({1, 1, 1, 1, 1}, {2, 1, 1, 1}) == -1);
    CHECK(partitions(5).size() == 7);
  }

  TEST_CASE("quotients") {
    const auto& x5 = x_lattice(5);
    auto q1 = quotient(x5.group, x5.at("D8").members, x5.at("S2S2").members);
    CHECK(q1.standard_name == "S2");
    auto q2 = quotient(x5.group, x5.at("S3S2").members, x5.at("S3").members);
    CHECK(q2.standard_name == "S2");
    auto q3 = quotient(x5.group, x5.at("S3S2").members, x5.at("S2").members);
    CHECK(q3.standard_name == "S3");
    const auto& x4 = x_lattice(4);
    auto q4 = quotient(x4.group, x4.at("S2S2").members, x4.at("S2").members);
    CHECK(q4.standard_name == "S2");
    CHECK(q4.projection.kernel() == x4.at("S2").members);
    CHECK(quotient(x4.group, x4.at("S4").members, x4.at("S4").members).standard_name == "S1");
  }

  TEST_CASE("homomorphisms") {
    auto s3 = Group::symmetric(3), s2 = Group::symmetric(2);
    Elem a = *s3->find_perm(perm_from_cycles(3, {{1, 2}})), b = *s3->find_perm(perm_from_cycles(3, {{1, 2, 3}}));
    Elem t = *s2->find_perm(perm_from_cycles(2, {{1, 2}}));
    auto sign = hom_from_generators(s3, {a, b}, s2, {t, 0});
    REQUIRE(sign);
    CHECK(sign->is_surjective());
    CHECK(sign->kernel().size() == 3);
    CHECK_FALSE(hom_from_generators(s3, {a, b}, s2, {0, t}));  // 3-cycle to an involution
  }
}
