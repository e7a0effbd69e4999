#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slmn/bigrat.hpp"

namespace slmn {

// Laurent polynomial in the deformation parameter q over arbitrary-precision
// rationals.  Stored dense: coeff(low + i) = c_[i], with c_.front()lowest and
// c_.back() highest both nonzero (empty vector means the zero polynomial).
class QPoly {
 public:
  QPoly() = default;
  static QPoly zero() { return QPoly(); }
  static QPoly one() { return monomial(0, 1); }
  static QPoly monomial(long exp, BigRat c);
  static QPoly from_coeffs(long low, std::vector<BigRat> coeffs);

  bool is_zero() const { return c_.empty(); }
  long low() const;    // lowest exponent; throws on zero
  long high() const;   // highest exponent; throws on zero
  long degree_span() const { return is_zero() ? 0 : high() - low(); }
  BigRat coeff(long exp) const;
  const std::vector<BigRat>& coeffs() const { return c_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  bool operator==(const QPoly& o) const { return low_ == o.low_ && c_ == o.c_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly shifted(long k) const;              // multiply by q^k
  QPoly scaled(const BigRat& s) const;
  QPoly inflate(int f) const;               // q -> q^f
  std::optional<QPoly> deflate(int f) const;  // q^f -> q; nullopt if exponents not divisible
  BigRat eval(const BigRat& q) const;         // exact evaluation at a nonzero rational
  Dec50 eval(const Dec50& q) const;

  // True-polynomial division helpers (require low() >= 0 on both operands).
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
  static QPoly gcd(const QPoly& a, const QPoly& b);  // monic gcd of true polynomials

  // Power-series truncation of 1/this up to q^cap (requires low() == 0).
  QPoly inverse_series(long cap) const;
  QPoly truncated(long cap) const;  // drop exponents > cap

  std::string str() const;

 private:
  void normalize();
  long low_ = 0;
  std::vector<BigRat> c_;
};

// Exact rational function of q: numerator a Laurent polynomial, denominator a
// true polynomial with nonzero constant term, monic, coprime to the numerator.
// Canonical, so equality is representational.
class QRat {
 public:
  QRat() : num_(QPoly::zero()), den_(QPoly::one()) {}
  QRat(long v) : QRat(BigRat(v)) {}
  QRat(const BigRat& v) : num_(QPoly::monomial(0, v)), den_(QPoly::one()) {}
  QRat(QPoly num, QPoly den);
  explicit QRat(QPoly num) : num_(std::move(num)), den_(QPoly::one()) {}

  static QRat zero() { return QRat(); }
  static QRat one() { return QRat(1); }
  static QRat q_power(long k) { return QRat(QPoly::monomial(k, 1)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == QPoly::one() && den_ == QPoly::one(); }

  QRat operator-() const;
  QRat operator+(const QRat& o) const;
  QRat operator-(const QRat& o) const;
  QRat operator*(const QRat& o) const;
  QRat operator/(const QRat& o) const;
  QRat& operator+=(const QRat& o) { return *this = *this + o; }
  QRat& operator-=(const QRat& o) { return *this = *this - o; }
  QRat& operator*=(const QRat& o) { return *this = *this * o; }
  QRat& operator/=(const QRat& o) { return *this = *this / o; }
  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const QRat& o) const { return !(*this == o); }

  QRat inverse() const;
  QRat pow(long e) const;
  QRat inflate(int f) const { return QRat(num_.inflate(f), den_.inflate(f)); }
  std::optional<QRat> deflate(int f) const;

  // Leading (highest-exponent) numerator coefficient; 0 for the zero function.
  BigRat lead_coeff() const;

  // Power-series expansion to q^cap (Laurent if num has negative exponents).
  QPoly series(long cap) const;

  BigRat eval(const BigRat& q) const;
  Dec50 eval(const Dec50& q) const;

  std::string str() const;

 private:
  void canonicalize();
  QPoly num_, den_;
};

// The q-integer [n]_q = (q^n - q^{-n})/(q - q^{-1}) as an exact Laurent
// polynomial: q^{n-1} + q^{n-3} + ... + q^{-(n-1)} for n > 0.
QRat qint(long n);

}  // namespace slmn
