#pragma once

#include <map>
#include <string>
#include <vector>

#include "slmn/qrat.hpp"

namespace slmn {

// Process-wide interning of spectral variable names (w_0, w_0', z_1, ...).
// The table only grows; ids are stable for the lifetime of the process.
using VarId = unsigned;
VarId var_id(const std::string& name);
const std::string& var_name(VarId id);

// Sparse Laurent monomial: sorted (variable, nonzero exponent) pairs.
struct Mono {
  std::vector<std::pair<VarId, int>> e;

  static Mono unit() { return {}; }
  static Mono of(VarId v, int exp);
  bool is_unit() const { return e.empty(); }
  int exp(VarId v) const;
  Mono operator*(const Mono& o) const;
  Mono inverse() const;
  Mono pow(int k) const;
  bool operator<(const Mono& o) const { return e < o.e; }
  bool operator==(const Mono& o) const { return e == o.e; }
  std::string str() const;
};

// Sparse multivariate Laurent polynomial with QRat coefficients.
class MPoly {
 public:
  MPoly() = default;
  MPoly(const QRat& c) { if (!c.is_zero()) t_[Mono::unit()] = c; }
  MPoly(long c) : MPoly(QRat(c)) {}
  static MPoly zero() { return MPoly(); }
  static MPoly one() { return MPoly(QRat(1)); }
  static MPoly term(const Mono& m, const QRat& c);
  static MPoly variable(const std::string& name, int exp = 1);

  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  const std::map<Mono, QRat>& terms() const { return t_; }
  QRat coeff(const Mono& m) const;

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  bool operator==(const MPoly& o) const { return t_ == o.t_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  MPoly scaled(const QRat& s) const;
  MPoly mul_mono(const Mono& m) const;

  // v -> c * target^texp (c nonzero; texp may be negative or zero).
  MPoly subst_monomial(VarId v, const QRat& c, VarId target, int texp) const;
  // v -> constant value (exact).
  MPoly subst_const(VarId v, const QRat& value) const;
  // Exact evaluation with every variable bound.
  QRat eval(const std::map<VarId, QRat>& binding) const;

  // Per-variable minimum exponent over all terms (for content stripping).
  std::map<VarId, int> min_exps() const;
  bool uses(VarId v) const;
  std::vector<VarId> variables() const;

  std::string str() const;

 private:
  std::map<Mono, QRat> t_;
  void add_term(const Mono& m, const QRat& c);
};

// Rational function over MPoly.  Not gcd-reduced; zero-test and equality are
// exact (numerator test / cross-multiplication).  Normalization strips the
// denominator's monomial content and scales its leading term to 1 so that
// structurally equal denominators are detected by operator+'s fast path.
class MRat {
 public:
  MRat() : num_(), den_(MPoly::one()) {}
  MRat(const MPoly& num) : num_(num), den_(MPoly::one()) {}
  MRat(const QRat& c) : num_(MPoly(c)), den_(MPoly::one()) {}
  MRat(long c) : num_(MPoly(c)), den_(MPoly::one()) {}
  MRat(MPoly num, MPoly den);

  static MRat zero() { return MRat(); }
  static MRat one() { return MRat(1L); }
  static MRat variable(const std::string& name, int exp = 1) {
    return MRat(MPoly::variable(name, exp));
  }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool equals(const MRat& o) const;

  MRat operator-() const;
  MRat operator+(const MRat& o) const;
  MRat operator-(const MRat& o) const;
  MRat operator*(const MRat& o) const;
  MRat operator/(const MRat& o) const;
  MRat& operator+=(const MRat& o) { return *this = *this + o; }
  MRat& operator-=(const MRat& o) { return *this = *this - o; }
  MRat& operator*=(const MRat& o) { return *this = *this * o; }
  MRat& operator/=(const MRat& o) { return *this = *this / o; }
  bool operator==(const MRat& o) const { return equals(o); }

  MRat inverse() const;
  MRat pow(long e) const;

  MRat subst_monomial(VarId v, const QRat& c, VarId target, int texp) const;
  MRat subst_const(VarId v, const QRat& value) const;
  QRat eval(const std::map<VarId, QRat>& binding) const;

  // Constant extraction: requires num and den free of spectral variables.
  QRat as_qrat() const;
  bool is_constant() const;

  std::string str() const;

 private:
  void normalize();
  MPoly num_, den_;
};

}  // namespace slmn
