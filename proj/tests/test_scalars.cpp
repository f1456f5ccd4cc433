#include <random>

#include "bipos/cyclo.hpp"
#include "doctest.h"

using bipos::Cyclo;
using bipos::Rational;

TEST_SUITE("scalars") {
  TEST_CASE("roots of unity") {
    Cyclo i = Cyclo::zeta60(15);
    CHECK(i * i == Cyclo(-1));
    Cyclo s = Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 2) + Cyclo::root_of_unity(5, 3) +
              Cyclo::root_of_unity(5, 4);
    CHECK(s == Cyclo(-1));
    Cyclo th = Cyclo::root_of_unity(3, 1);
    CHECK(Cyclo(Rational(1, 2)) * th + Cyclo(Rational(1, 2)) * th == th);
    CHECK(Cyclo::zeta60(60) == Cyclo(1));
    CHECK(Cyclo::zeta60(-1) * Cyclo::zeta60(1) == Cyclo(1));
  }

  TEST_CASE("conjugation") {
    CHECK(Cyclo::zeta60(15).conj() == -Cyclo::zeta60(15));
    CHECK(Cyclo(Rational(3, 4)).conj() == Cyclo(Rational(3, 4)));
    Cyclo th = Cyclo::root_of_unity(3, 1);
    CHECK(th.conj() == th * th);
  }

  TEST_CASE("nonnegative reals") {
    CHECK(Cyclo(Rational(2, 3)).is_nonneg_real());
    CHECK((Cyclo::root_of_unity(5, 1) + Cyclo::root_of_unity(5, 4)).is_nonneg_real());
    CHECK_FALSE(Cyclo(-1).is_nonneg_real());
    CHECK_FALSE(Cyclo::zeta60(15).is_nonneg_real());  // i is not real
    CHECK_FALSE((Cyclo::root_of_unity(5, 2) + Cyclo::root_of_unity(5, 3)).is_nonneg_real());
  }

  TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> k(0, 59), c(-3, 3);
    auto rnd = [&] {
      Cyclo x;
      for (int t = 0; t < 3; ++t) x += Cyclo(c(rng)) * Cyclo::zeta60(k(rng));
      return x;
    };
    for (int t = 0; t < 200; ++t) {
      Cyclo a = rnd(), b = rnd();
      CHECK((a * b).conj() == a.conj() * b.conj());
      CHECK(a.conj().conj() == a);
      CHECK((a + b) - b == a);
      if (!b.is_zero()) CHECK((a / b) * b == a);
      std::complex<double> z = (a * b).eval() - a.eval() * b.eval();
      CHECK(std::abs(z) < 1e-9);
    }
  }

  TEST_CASE("canonical form") {
    // 1 + z + ... + z^4 = 0 for z a primitive 5th root, so equal values compare equal.
    Cyclo a = -(Cyclo::root_of_unity(5, 2) + Cyclo::root_of_unity(5, 3) + Cyclo::root_of_unity(5, 4) + Cyclo(1));
    CHECK(a == Cyclo::root_of_unity(5, 1));
    CHECK(Cyclo::from_triples(a.triples()) == a);
    CHECK(Cyclo(Rational(6, 4)).to_rational() == Rational(3, 2));
    CHECK_THROWS_AS(Cyclo::zeta60(1).to_rational(), std::domain_error);
  }
}
