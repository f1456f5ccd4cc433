#include "bipos/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bipos {
namespace {

constexpr int N = Cyclo::kDegree;
using Wide = std::array<__int128, 2 * N - 1>;

// x^16 = -x^14 + x^10 + x^8 + x^6 - x^2 - 1   (mod Phi_60)
constexpr std::array<int, N> kTail = {-1, 0, -1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, -1, 0};

void reduce(Wide& w) {
  for (int d = 2 * N - 2; d >= N; --d) {
    __int128 c = w[d];
    if (c == 0) continue;
    w[d] = 0;
    for (int k = 0; k < N; ++k)
      if (kTail[k]) w[d - N + k] += c * kTail[k];
  }
}

struct Tables {
  std::array<Cyclo::Coeffs, Cyclo::kOrder> pow{};  // z^k reduced
  std::array<std::complex<double>, N> basis_val{};
  Tables() {
    for (int k = 0; k < Cyclo::kOrder; ++k) {
      Wide w{};
      // z^k = z^(k-1) * z; start from 1
      if (k == 0) {
        w[0] = 1;
      } else {
        for (int i = 0; i < N; ++i) w[i + 1] = pow[k - 1][i];
        reduce(w);
      }
      for (int i = 0; i < N; ++i) pow[k][i] = static_cast<std::int64_t>(w[i]);
    }
    for (int i = 0; i < N; ++i) {
      double a = 2.0 * std::numbers::pi * i / Cyclo::kOrder;
      basis_val[i] = {std::cos(a), std::sin(a)};
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

void Cyclo::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  std::int64_t g = den_;
  for (auto x : num_) g = detail::gcd(g, x);
  if (g > 1) {
    den_ /= g;
    for (auto& x : num_) x /= g;
  }
  if (num_ == Coeffs{}) den_ = 1;
}

Cyclo Cyclo::from_coeffs(const Coeffs& num, std::int64_t den) {
  if (den == 0) throw std::domain_error("Cyclo: zero denominator");
  Cyclo c;
  c.num_ = num;
  c.den_ = den;
  c.normalize();
  return c;
}

Cyclo Cyclo::zeta60(int k) {
  k %= kOrder;
  if (k < 0) k += kOrder;
  Cyclo c;
  c.num_ = tables().pow[k];
  return c;
}

Cyclo Cyclo::root_of_unity(int m, int j) {
  if (m <= 0 || kOrder % m != 0) throw std::invalid_argument("root_of_unity: order must divide 60");
  return zeta60((kOrder / m) * (((j % m) + m) % m));
}

bool Cyclo::is_rational() const {
  for (int i = 1; i < N; ++i)
    if (num_[i]) return false;
  return true;
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw std::domain_error("Cyclo: value is not rational");
  return Rational(num_[0], den_);
}

Cyclo Cyclo::conj() const {
  if (is_rational()) return *this;
  const auto& t = tables();
  Coeffs out{};
  for (int i = 0; i < N; ++i) {
    if (!num_[i]) continue;
    const auto& p = t.pow[(kOrder - i) % kOrder];
    for (int k = 0; k < N; ++k) out[k] = detail::add(out[k], detail::mul(num_[i], p[k]));
  }
  return from_coeffs(out, den_);
}

std::complex<double> Cyclo::eval() const {
  const auto& t = tables();
  std::complex<double> s = 0;
  for (int i = 0; i < N; ++i)
    if (num_[i]) s += static_cast<double>(num_[i]) * t.basis_val[i];
  return s / static_cast<double>(den_);
}

bool Cyclo::is_nonneg_real(double tol) const {
  if (is_rational()) return num_[0] >= 0;
  if (!is_real()) return false;
  return eval().real() >= -tol;
}

Cyclo Cyclo::operator-() const {
  Cyclo c = *this;
  for (auto& x : c.num_) x = -x;
  return c;
}

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::int64_t g = detail::gcd(a.den_, b.den_);
  std::int64_t fa = b.den_ / g, fb = a.den_ / g;
  Cyclo::Coeffs out;
  for (int i = 0; i < N; ++i)
    out[i] = detail::add(detail::mul(a.num_[i], fa), detail::mul(b.num_[i], fb));
  return Cyclo::from_coeffs(out, detail::mul(a.den_, fa));
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  // Fast path: one side rational is a plain scaling.
  if (a.is_rational() || b.is_rational()) {
    const Cyclo& r = a.is_rational() ? a : b;
    const Cyclo& v = a.is_rational() ? b : a;
    std::int64_t s = r.num_[0];
    if (s == 0) return Cyclo();
    Cyclo::Coeffs out;
    for (int i = 0; i < N; ++i) out[i] = detail::mul(v.num_[i], s);
    return Cyclo::from_coeffs(out, detail::mul(v.den_, r.den_));
  }
  Wide w{};
  for (int i = 0; i < N; ++i) {
    if (!a.num_[i]) continue;
    for (int j = 0; j < N; ++j) w[i + j] += static_cast<__int128>(a.num_[i]) * b.num_[j];
  }
  reduce(w);
  Cyclo::Coeffs out;
  for (int i = 0; i < N; ++i) out[i] = detail::narrow(w[i]);
  return Cyclo::from_coeffs(out, detail::mul(a.den_, b.den_));
}

// Inverse by solving the 16x16 multiplication-by-a system exactly.
Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("Cyclo: division by zero");
  if (is_rational()) return Cyclo(Rational(den_, num_[0]));
  // Column j of the matrix is a * z^j.
  std::array<std::array<Rational, N + 1>, N> m;
  for (int j = 0; j < N; ++j) {
    Cyclo col = *this * zeta60(j);
    for (int i = 0; i < N; ++i) m[i][j] = col.coeff(i);
  }
  for (int i = 0; i < N; ++i) m[i][N] = Rational(i == 0 ? 1 : 0);
  for (int c = 0; c < N; ++c) {
    int p = c;
    while (p < N && m[p][c].is_zero()) ++p;
    if (p == N) throw std::logic_error("Cyclo: singular multiplication matrix");
    std::swap(m[p], m[c]);
    Rational inv = Rational(1) / m[c][c];
    for (int k = c; k <= N; ++k) m[c][k] *= inv;
    for (int r = 0; r < N; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      Rational f = m[r][c];
      for (int k = c; k <= N; ++k) m[r][k] -= f * m[c][k];
    }
  }
  Cyclo out;
  for (int i = 0; i < N; ++i) out += Cyclo(m[i][N]) * zeta60(i);
  return out;
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

std::vector<std::tuple<int, std::int64_t, std::int64_t>> Cyclo::triples() const {
  std::vector<std::tuple<int, std::int64_t, std::int64_t>> out;
  for (int i = 0; i < N; ++i) {
    if (!num_[i]) continue;
    Rational r(num_[i], den_);
    out.emplace_back(i, r.num(), r.den());
  }
  return out;
}

Cyclo Cyclo::from_triples(const std::vector<std::tuple<int, std::int64_t, std::int64_t>>& t) {
  Cyclo out;
  for (auto [k, n, d] : t) out += Cyclo(Rational(n, d)) * zeta60(k);
  return out;
}

std::string Cyclo::str() const {
  if (is_rational()) return to_rational().str();
  std::ostringstream os;
  bool first = true;
  for (auto [k, n, d] : triples()) {
    Rational r(n, d);
    if (!first) os << (r < Rational(0) ? " - " : " + ");
    else if (r < Rational(0)) os << "-";
    Rational a = r < Rational(0) ? -r : r;
    if (k == 0) {
      os << a;
    } else {
      if (a != Rational(1)) os << a << "*";
      os << "z60^" << k;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclo& c) { return os << c.str(); }

}  // namespace bipos
