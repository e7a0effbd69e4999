#include "slmn/qrat.hpp"

#include <sstream>
#include <stdexcept>

namespace slmn {

void QPoly::normalize() {
  size_t lo = 0, hi = c_.size();
  while (lo < hi && c_[lo] == 0) ++lo;
  while (hi > lo && c_[hi - 1] == 0) --hi;
  if (lo == hi) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (lo > 0) {
    c_.erase(c_.begin(), c_.begin() + lo);
    low_ += static_cast<long>(lo);
  }
  c_.resize(hi - lo);
}

QPoly QPoly::monomial(long exp, BigRat c) {
  QPoly p;
  if (c != 0) {
    p.low_ = exp;
    p.c_ = {std::move(c)};
  }
  return p;
}

QPoly QPoly::from_coeffs(long low, std::vector<BigRat> coeffs) {
  QPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.normalize();
  return p;
}

long QPoly::low() const {
  if (is_zero()) throw std::logic_error("QPoly::low on zero");
  return low_;
}

long QPoly::high() const {
  if (is_zero()) throw std::logic_error("QPoly::high on zero");
  return low_ + static_cast<long>(c_.size()) - 1;
}

BigRat QPoly::coeff(long exp) const {
  if (is_zero() || exp < low_ || exp > high()) return 0;
  return c_[static_cast<size_t>(exp - low_)];
}

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  long lo = std::min(low_, o.low_);
  long hi = std::max(high(), o.high());
  std::vector<BigRat> c(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < c_.size(); ++i) c[static_cast<size_t>(low_ - lo) + i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[static_cast<size_t>(o.low_ - lo) + i] += o.c_[i];
  return from_coeffs(lo, std::move(c));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return zero();
  std::vector<BigRat> c(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return from_coeffs(low_ + o.low_, std::move(c));
}

QPoly QPoly::shifted(long k) const {
  QPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

QPoly QPoly::scaled(const BigRat& s) const {
  if (s == 0) return zero();
  QPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

QPoly QPoly::inflate(int f) const {
  if (is_zero()) return zero();
  std::vector<BigRat> c(static_cast<size_t>(degree_span()) * f + 1);
  for (size_t i = 0; i < c_.size(); ++i) c[i * f] = c_[i];
  return from_coeffs(low_ * f, std::move(c));
}

std::optional<QPoly> QPoly::deflate(int f) const {
  if (is_zero()) return zero();
  if (low_ % f != 0) return std::nullopt;
  std::vector<BigRat> c;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i % f == 0) {
      c.push_back(c_[i]);
    } else if (c_[i] != 0) {
      return std::nullopt;
    }
  }
  return from_coeffs(low_ / f, std::move(c));
}

BigRat QPoly::eval(const BigRat& q) const {
  BigRat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q + c_[i];
  BigRat qp = 1;
  for (long k = 0; k < (low_ >= 0 ? low_ : -low_); ++k) qp *= q;
  return low_ >= 0 ? BigRat(acc * qp) : BigRat(acc / qp);
}

Dec50 QPoly::eval(const Dec50& q) const {
  Dec50 acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q + to_dec50(c_[i]);
  return acc * pow(q, static_cast<int>(low_));
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  if (b.is_zero()) throw std::invalid_argument("QPoly::divmod by zero");
  if (!a.is_zero() && a.low() < 0) throw std::invalid_argument("divmod needs true polynomials");
  if (b.low() < 0) throw std::invalid_argument("divmod needs true polynomials");
  quo = zero();
  rem = a;
  long db = b.high();
  BigRat lb = b.c_.back();
  while (!rem.is_zero() && rem.high() >= db) {
    long sh = rem.high() - db;
    BigRat f = rem.c_.back() / lb;
    quo = quo + monomial(sh, f);
    rem = rem - b.shifted(sh).scaled(f);
  }
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.scaled(1 / x.c_.back());  // monic
}

QPoly QPoly::inverse_series(long cap) const {
  if (is_zero() || low_ != 0) throw std::invalid_argument("inverse_series needs unit constant term");
  std::vector<BigRat> inv(static_cast<size_t>(cap) + 1);
  inv[0] = 1 / c_[0];
  for (long n = 1; n <= cap; ++n) {
    BigRat s = 0;
    for (long j = 1; j <= n && j < static_cast<long>(c_.size()); ++j)
      s += c_[static_cast<size_t>(j)] * inv[static_cast<size_t>(n - j)];
    inv[static_cast<size_t>(n)] = -s / c_[0];
  }
  return from_coeffs(0, std::move(inv));
}

QPoly QPoly::truncated(long cap) const {
  if (is_zero() || high() <= cap) return *this;
  if (low_ > cap) return zero();
  std::vector<BigRat> c(c_.begin(), c_.begin() + static_cast<size_t>(cap - low_ + 1));
  return from_coeffs(low_, std::move(c));
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    long e = low_ + static_cast<long>(i);
    if (!first) os << (c_[i] > 0 ? " + " : " - ");
    else if (c_[i] < 0) os << "-";
    BigRat ab = abs(c_[i]);
    if (ab != 1 || e == 0) os << ab;
    if (e != 0) {
      if (ab != 1) os << "*";
      os << "q";
      if (e != 1) os << "^" << e;
    }
    first = false;
  }
  return os.str();
}

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("QRat: zero denominator");
  canonicalize();
}

void QRat::canonicalize() {
  if (num_.is_zero()) {
    den_ = QPoly::one();
    return;
  }
  // Shift both to true polynomials, remembering the net q-power on the numerator.
  long a = num_.low(), b = den_.low();
  QPoly n = num_.shifted(-a), d = den_.shifted(-b);
  QPoly g = QPoly::gcd(n, d);
  if (g.degree_span() > 0) {
    QPoly q, r;
    QPoly::divmod(n, g, q, r);
    n = q;
    QPoly::divmod(d, g, q, r);
    d = q;
  }
  BigRat lead = d.coeffs().back();
  num_ = n.shifted(a - b).scaled(1 / lead);
  den_ = d.scaled(1 / lead);
  // Keep the denominator a genuine polynomial with nonzero constant term.
  if (den_.low() != 0) {
    long s = den_.low();
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat QRat::operator+(const QRat& o) const {
  if (den_ == o.den_) return QRat(num_ + o.num_, den_);
  return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const { return QRat(num_ * o.num_, den_ * o.den_); }

QRat QRat::operator/(const QRat& o) const {
  if (o.is_zero()) throw std::invalid_argument("QRat: division by zero");
  return QRat(num_ * o.den_, den_ * o.num_);
}

QRat QRat::inverse() const {
  if (is_zero()) throw std::invalid_argument("QRat: inverse of zero");
  return QRat(den_, num_);
}

QRat QRat::pow(long e) const {
  if (e == 0) return one();
  QRat base = e > 0 ? *this : inverse();
  long n = e > 0 ? e : -e;
  QRat acc = one();
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

std::optional<QRat> QRat::deflate(int f) const {
  auto n = num_.deflate(f);
  auto d = den_.deflate(f);
  if (!n || !d) return std::nullopt;
  return QRat(*n, *d);
}

BigRat QRat::lead_coeff() const {
  if (is_zero()) return 0;
  return num_.coeffs().back();
}

QPoly QRat::series(long cap) const {
  if (is_zero()) return QPoly::zero();
  long shift = num_.low();
  if (cap < shift) return QPoly::zero();
  QPoly n = num_.shifted(-shift);
  QPoly dinv = den_.inverse_series(cap - shift);
  return (n * dinv).truncated(cap - shift).shifted(shift);
}

BigRat QRat::eval(const BigRat& q) const {
  // Avoid QPoly::eval's Laurent branch: evaluate shifted true polynomials.
  long a = num_.is_zero() ? 0 : num_.low();
  BigRat n = 0;
  for (size_t i = num_.coeffs().size(); i-- > 0;) n = n * q + num_.coeffs()[i];
  BigRat d = 0;
  for (size_t i = den_.coeffs().size(); i-- > 0;) d = d * q + den_.coeffs()[i];
  BigRat qa = 1;
  for (long k = 0; k < (a >= 0 ? a : -a); ++k) qa *= q;
  if (a >= 0) return BigRat(n * qa / d);
  return BigRat(n / (qa * d));
}

Dec50 QRat::eval(const Dec50& q) const {
  if (is_zero()) return Dec50(0);
  return num_.eval(q) / den_.eval(q);
}

std::string QRat::str() const {
  if (den_.is_zero() || den_ == QPoly::one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

QRat qint(long n) {
  if (n == 0) return QRat::zero();
  if (n < 0) return -qint(-n);
  QPoly p;
  for (long e = -(n - 1); e <= n - 1; e += 2) p = p + QPoly::monomial(e, 1);
  return QRat(p);
}

}  // namespace slmn
