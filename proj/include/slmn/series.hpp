#pragma once

#include <string>
#include <vector>

#include "slmn/qrat.hpp"

namespace slmn {

// Truncated power series in one expansion variable with exact QRat
// coefficients c[0..K].  All operations preserve the order K.
class TruncSeries {
 public:
  TruncSeries(std::string var, int order);
  static TruncSeries constant(std::string var, int order, const QRat& c);

  const std::string& var() const { return var_; }
  int order() const { return K_; }
  const QRat& coeff(int m) const { return c_.at(static_cast<size_t>(m)); }
  void set_coeff(int m, QRat v) { c_.at(static_cast<size_t>(m)) = std::move(v); }

  TruncSeries operator-() const;
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries scaled(const QRat& s) const;
  bool operator==(const TruncSeries& o) const;

  TruncSeries inverse() const;  // requires c0 != 0
  TruncSeries exp_() const;     // requires c0 == 0
  TruncSeries log_() const;     // requires c0 == 1

  // Equality of q-truncations: every coefficient agrees modulo q^{qcap+1}.
  bool eq_mod_q(const TruncSeries& o, long qcap) const;

  std::string str() const;

 private:
  void check_compatible(const TruncSeries& o) const;
  std::string var_;
  int K_;
  std::vector<QRat> c_;
};

// (q^a x; q^p)_infty as a joint truncation: the product of the factors
// (1 - q^{a+kp} x) with a + kp <= K, with every coefficient then truncated at
// q^K.  Requires p > 0.
TruncSeries pochhammer_series(long a_qpow, long p_qpow, int K, const std::string& var = "x");

// Exact x^m coefficient of log (q^a x; q^p)_infty: -q^{am} / (m (1 - q^{pm})).
QRat poch_log_coeff(long a, long p, long m);

// Exact x^m coefficient of log (1 - q^a x)^{\pm 1}: -(\pm 1) q^{am} / m.
QRat binomial_log_coeff(long a, long m, int sign_exp);

}  // namespace slmn
