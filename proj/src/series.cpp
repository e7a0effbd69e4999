#include "slmn/series.hpp"

#include <sstream>
#include <stdexcept>

namespace slmn {

TruncSeries::TruncSeries(std::string var, int order) : var_(std::move(var)), K_(order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  c_.assign(static_cast<size_t>(order) + 1, QRat::zero());
}

TruncSeries TruncSeries::constant(std::string var, int order, const QRat& c) {
  TruncSeries s(std::move(var), order);
  s.c_[0] = c;
  return s;
}

void TruncSeries::check_compatible(const TruncSeries& o) const {
  if (var_ != o.var_ || K_ != o.K_)
    throw std::invalid_argument("TruncSeries: incompatible operands");
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const { return *this + (-o); }

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  check_compatible(o);
  TruncSeries r(var_, K_);
  for (int m = 0; m <= K_; ++m) {
    QRat s;
    for (int j = 0; j <= m; ++j) s += c_[static_cast<size_t>(j)] * o.c_[static_cast<size_t>(m - j)];
    r.c_[static_cast<size_t>(m)] = s;
  }
  return r;
}

TruncSeries TruncSeries::scaled(const QRat& s) const {
  TruncSeries r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
  return var_ == o.var_ && K_ == o.K_ && c_ == o.c_;
}

TruncSeries TruncSeries::inverse() const {
  if (c_[0].is_zero()) throw std::invalid_argument("TruncSeries::inverse: zero constant term");
  TruncSeries r(var_, K_);
  r.c_[0] = c_[0].inverse();
  for (int m = 1; m <= K_; ++m) {
    QRat s;
    for (int j = 1; j <= m; ++j) s += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(m - j)];
    r.c_[static_cast<size_t>(m)] = -s / c_[0];
  }
  return r;
}

TruncSeries TruncSeries::exp_() const {
  if (!c_[0].is_zero()) throw std::invalid_argument("TruncSeries::exp: nonzero constant term");
  TruncSeries r(var_, K_);
  r.c_[0] = QRat(1);
  for (int m = 1; m <= K_; ++m) {
    QRat s;
    for (int j = 1; j <= m; ++j)
      s += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(m - j)] * QRat(j);
    r.c_[static_cast<size_t>(m)] = s / QRat(m);
  }
  return r;
}

TruncSeries TruncSeries::log_() const {
  if (!c_[0].is_one()) throw std::invalid_argument("TruncSeries::log: constant term must be 1");
  TruncSeries r(var_, K_);
  for (int m = 1; m <= K_; ++m) {
    QRat s = c_[static_cast<size_t>(m)] * QRat(m);
    for (int j = 1; j < m; ++j)
      s -= r.c_[static_cast<size_t>(j)] * c_[static_cast<size_t>(m - j)] * QRat(j);
    r.c_[static_cast<size_t>(m)] = s / QRat(m);
  }
  return r;
}

bool TruncSeries::eq_mod_q(const TruncSeries& o, long qcap) const {
  if (var_ != o.var_ || K_ != o.K_) return false;
  for (size_t i = 0; i < c_.size(); ++i) {
    QRat d = c_[i] - o.c_[i];
    if (d.is_zero()) continue;
    if (!d.series(qcap).is_zero()) return false;
  }
  return true;
}

std::string TruncSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int m = 0; m <= K_; ++m) {
    if (c_[static_cast<size_t>(m)].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[static_cast<size_t>(m)].str() << ")";
    if (m > 0) os << "*" << var_ << "^" << m;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << (K_ + 1) << ")";
  return os.str();
}

TruncSeries pochhammer_series(long a_qpow, long p_qpow, int K, const std::string& var) {
  if (p_qpow <= 0) throw std::invalid_argument("pochhammer_series: requires p_qpow > 0");
  // Partial product of the first K factors (1 - q^{a+kp} x), truncated at x^K.
  // Dropped factors only touch q-exponents >= a + Kp, so coefficients are the
  // infinite product's coefficients modulo q^{a + Kp}.
  TruncSeries s = TruncSeries::constant(var, K, QRat(1));
  for (long k = 0; k < K; ++k) {
    long e = a_qpow + k * p_qpow;
    TruncSeries f = TruncSeries::constant(var, K, QRat(1));
    if (K >= 1) f.set_coeff(1, -QRat::q_power(e));
    s = s * f;
  }
  return s;
}

QRat poch_log_coeff(long a, long p, long m) {
  if (m <= 0) throw std::invalid_argument("poch_log_coeff: m >= 1 required");
  QPoly den = QPoly::one() - QPoly::monomial(p * m, 1);
  return QRat(QPoly::monomial(a * m, BigRat(-1, m)), den);
}

QRat binomial_log_coeff(long a, long m, int sign_exp) {
  if (m <= 0) throw std::invalid_argument("binomial_log_coeff: m >= 1 required");
  return QRat(QPoly::monomial(a * m, BigRat(-sign_exp, m)));
}

}  // namespace slmn
