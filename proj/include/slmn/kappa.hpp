#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slmn/mpoly.hpp"
#include "slmn/scalar.hpp"

namespace slmn {

// A product of q-Pochhammer symbols (q^a x^{dir}; q^p)_infty^{e}, binomial
// factors (1 - q^b x)^{e} and a Scalar prefactor, in one formal variable.
// Canonical form: Pochhammer bases satisfy 0 < a <= p (peeled binomials move
// into `bins`), binomials point in the +1 direction, monomials live in the
// scalar.  This represents every kappa / chi normalization and every
// Appendix-style two-point factor in closed form.
class PochExpr {
 public:
  struct Key {
    long a;   // base exponent, canonical: 0 < a <= p
    long p;   // step, > 0
    int dir;  // +1: argument q^a x, -1: argument q^a / x
    bool operator<(const Key& o) const {
      return std::tie(a, p, dir) < std::tie(o.a, o.p, o.dir);
    }
    bool operator==(const Key& o) const { return a == o.a && p == o.p && dir == o.dir; }
  };

  explicit PochExpr(std::string var) : var_(std::move(var)) {}
  static PochExpr one(std::string var) { return PochExpr(std::move(var)); }

  const std::string& var() const { return var_; }
  const Scalar& scalar() const { return scalar_; }
  const std::map<Key, int>& poch() const { return poch_; }
  const std::map<long, int>& bins() const { return bins_; }

  PochExpr& mul_scalar(const Scalar& s);
  PochExpr& mul_poch(long a, long p, int dir, int exp);  // canonicalizes
  PochExpr& mul_bin(long b, int dir, int exp);           // (1 - q^b x^{dir})^{exp}
  PochExpr operator*(const PochExpr& o) const;
  PochExpr inverse() const;

  // x -> q^k x  and  x -> q^k / x.
  PochExpr shift_arg(long k) const;
  PochExpr invert_arg(long k = 0) const;

  bool equals(const PochExpr& o) const;
  bool is_scalar() const { return poch_.empty() && bins_.empty(); }

  // Exact value at x = 1; requires every Pochhammer pair to cancel.
  std::optional<Scalar> eval_at_one() const;

  // The non-scalar part as an exact rational function of x (only when all
  // Pochhammer factors cancel, leaving binomials).
  std::optional<MRat> rational_part() const;

  // x^{+m} / x^{-m} coefficients (m >= 1) of log of the non-scalar part.
  QRat log_coeff(long m, int dir) const;

  // Symbolic-in-m log content: substitute q^m -> U^2, so the x^{+-m}
  // coefficient of m * log(...) becomes a rational function of U.  Used to
  // verify two-point kernels for all m at once.
  MRat log_kernel_sym(int dir, const std::string& uvar = "U") const;

  // Numeric modulus at x = x0 (0 < q0 < 1); the phase part is returned
  // exactly through scalar().phase.  Pochhammer tails are truncated once the
  // factor deviates from 1 by less than `tail`; requires |q0^a x0^{dir}| < 1
  // for every factor.
  Dec50 eval_abs(const Dec50& q0, const Dec50& x0, const Dec50& tail) const;

  std::string str() const;

 private:
  std::string var_;
  Scalar scalar_;
  std::map<Key, int> poch_;
  std::map<long, int> bins_;  // b -> exponent of (1 - q^b x)
};

// Numeric (q^a; q^p)_infty for 0 < q0 < 1, truncated when factors are within
// `tail` of 1.
Dec50 pochhammer_value(const Dec50& q0, long a, long p, const Dec50& tail);

enum class RKind { I, II };

// kappa_{VV}^{(I/II)} and the derived normalizations of section 3.1, as
// PochExpr in the given variable.  Branch M > N or N > M is taken from the
// arguments; M = N is rejected.
PochExpr kappa_vv(RKind kind, int M, int N, const std::string& var = "z");
PochExpr kappa_vstar_vstar(RKind kind, int M, int N, const std::string& var = "z");
PochExpr kappa_vstar_v(RKind kind, int M, int N, const std::string& var = "z");
PochExpr kappa_v_vstar(RKind kind, int M, int N, const std::string& var = "z");

// chi(z) of the Psi/Phi commutation relations.
PochExpr chi_fun(int M, int N, const std::string& var = "z");

}  // namespace slmn
