#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "bipos/rational.hpp"

namespace bipos {

// Element of Q(z), z = exp(2 pi i / 60).
//
// Stored in the power basis 1, z, ..., z^15 reduced modulo the 60th
// cyclotomic polynomial x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1, with one
// shared positive denominator. The representation is canonical: gcd of the
// numerators and the denominator is 1, and zero is all-zero over 1. So
// structural equality is field equality.
class Cyclo {
 public:
  static constexpr int kOrder = 60;
  static constexpr int kDegree = 16;
  using Coeffs = std::array<std::int64_t, kDegree>;

  Cyclo() = default;
  Cyclo(std::int64_t n) { num_[0] = n; }  // NOLINT
  Cyclo(const Rational& r) : den_(r.den()) { num_[0] = r.num(); }  // NOLINT

  // z^k for any integer k.
  static Cyclo zeta60(int k);
  // exp(2 pi i j / m), m must divide 60.
  static Cyclo root_of_unity(int m, int j);
  static Cyclo from_coeffs(const Coeffs& num, std::int64_t den);

  bool is_zero() const { return den_ == 1 && num_ == Coeffs{}; }
  bool is_rational() const;
  // Throws std::domain_error when not rational.
  Rational to_rational() const;
  bool is_real() const { return conj() == *this; }

  Cyclo conj() const;
  std::complex<double> eval() const;
  // Exact reality test plus numeric sign check; rationals are decided exactly.
  bool is_nonneg_real(double tol = 1e-9) const;

  Cyclo operator-() const;
  friend Cyclo operator+(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator-(const Cyclo& a, const Cyclo& b) { return a + (-b); }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b);
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  Cyclo& operator/=(const Cyclo& o) { return *this = *this / o; }
  Cyclo inverse() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b) = default;
  // Arbitrary but fixed total order (for use as a map key).
  friend bool operator<(const Cyclo& a, const Cyclo& b) {
    return std::tie(a.den_, a.num_) < std::tie(b.den_, b.num_);
  }

  const Coeffs& numerators() const { return num_; }
  std::int64_t denominator() const { return den_; }
  Rational coeff(int k) const { return Rational(num_[k], den_); }

  // (exponent, numerator, denominator) for every nonzero basis coefficient.
  std::vector<std::tuple<int, std::int64_t, std::int64_t>> triples() const;
  static Cyclo from_triples(const std::vector<std::tuple<int, std::int64_t, std::int64_t>>& t);
  // Integers print bare, other rationals as n/d, the rest as a sum of z60^k terms.
  std::string str() const;

 private:
  void normalize();

  Coeffs num_{};
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& c);

}  // namespace bipos
