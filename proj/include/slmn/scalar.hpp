#pragma once

#include <map>
#include <string>

#include "slmn/qrat.hpp"

namespace slmn {

// Unimodular scalar e^{pi*sqrt(-1)*r} with r an exact rational kept in [0,2).
class Phase {
 public:
  Phase() : r_(0) {}
  explicit Phase(BigRat r) : r_(std::move(r)) { reduce(); }
  static Phase one() { return Phase(); }
  static Phase minus_one() { return Phase(BigRat(1)); }

  const BigRat& exponent() const { return r_; }
  bool is_one() const { return r_ == 0; }
  bool is_minus_one() const { return r_ == 1; }

  Phase operator*(const Phase& o) const { return Phase(r_ + o.r_); }
  Phase inverse() const { return Phase(-r_); }
  Phase pow(long k) const { return Phase(r_ * k); }
  bool operator==(const Phase& o) const { return r_ == o.r_; }
  bool operator!=(const Phase& o) const { return r_ != o.r_; }

  // cos(pi r) + i sin(pi r)
  std::pair<Dec50, Dec50> value() const;
  std::string str() const;

 private:
  void reduce();
  BigRat r_;
};

// Product of symbolic fractional powers, map variable name -> exact rational
// exponent.  The key "q" is allowed and carries the fractional q-power of a
// scalar; integer q-powers live in the QRat part instead.
class FracMono {
 public:
  FracMono() = default;
  static FracMono of(const std::string& var, BigRat exp);

  bool is_one() const { return e_.empty(); }
  BigRat exp(const std::string& var) const;
  const std::map<std::string, BigRat>& exps() const { return e_; }

  FracMono operator*(const FracMono& o) const;
  FracMono inverse() const;
  FracMono pow(const BigRat& k) const;
  bool operator==(const FracMono& o) const { return e_ == o.e_; }
  bool operator!=(const FracMono& o) const { return !(*this == o); }

  void set(const std::string& var, BigRat exp);
  std::string str() const;

 private:
  std::map<std::string, BigRat> e_;
};

// (qz)^e with integer shift folded in: returns q^{g e} z^e as a FracMono.
FracMono shifted_power(const std::string& zvar, long g, const BigRat& e);

// Composite prefactor phase * qpart(q) * fractional monomial.  Normal form:
// integer q-exponents folded into qpart, qpart's leading coefficient positive
// (sign folded into the phase), so comparison is componentwise.
struct Scalar {
  Phase phase;
  QRat qpart = QRat(1);
  FracMono mono;

  Scalar() = default;
  Scalar(Phase ph, QRat qp, FracMono m);
  static Scalar one() { return Scalar(); }
  static Scalar of_qrat(QRat v) { return Scalar(Phase(), std::move(v), FracMono()); }

  bool is_zero() const { return qpart.is_zero(); }
  Scalar operator*(const Scalar& o) const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  void normalize();
  std::string str() const;
};

}  // namespace slmn
