#include "slmn/scalar.hpp"

#include <boost/math/constants/constants.hpp>
#include <sstream>
#include <stdexcept>

namespace slmn {

void Phase::reduce() {
  // r mod 2 into [0,2)
  BigInt n = rat_num(r_), d = rat_den(r_);
  BigInt two_d = 2 * d;
  BigInt m = n % two_d;
  if (m < 0) m += two_d;
  r_ = BigRat(m, two_d) * 2;
}

std::pair<Dec50, Dec50> Phase::value() const {
  static const Dec50 pi = boost::math::constants::pi<Dec50>();
  Dec50 a = to_dec50(r_) * pi;
  return {cos(a), sin(a)};
}

std::string Phase::str() const {
  if (is_one()) return "1";
  if (is_minus_one()) return "-1";
  std::ostringstream os;
  os << "e^{i*pi*" << r_ << "}";
  return os.str();
}

FracMono FracMono::of(const std::string& var, BigRat exp) {
  FracMono m;
  m.set(var, std::move(exp));
  return m;
}

BigRat FracMono::exp(const std::string& var) const {
  auto it = e_.find(var);
  return it == e_.end() ? BigRat(0) : it->second;
}

void FracMono::set(const std::string& var, BigRat exp) {
  if (exp == 0) e_.erase(var);
  else e_[var] = std::move(exp);
}

FracMono FracMono::operator*(const FracMono& o) const {
  FracMono r = *this;
  for (const auto& [v, ex] : o.e_) r.set(v, r.exp(v) + ex);
  return r;
}

FracMono FracMono::inverse() const {
  FracMono r;
  for (const auto& [v, ex] : e_) r.e_[v] = -ex;
  return r;
}

FracMono FracMono::pow(const BigRat& k) const {
  FracMono r;
  if (k == 0) return r;
  for (const auto& [v, ex] : e_) r.e_[v] = ex * k;
  return r;
}

std::string FracMono::str() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, ex] : e_) {
    if (!first) os << "*";
    os << v << "^(" << ex << ")";
    first = false;
  }
  return os.str();
}

FracMono shifted_power(const std::string& zvar, long g, const BigRat& e) {
  FracMono m;
  m.set(zvar, e);
  m.set("q", e * g);
  return m;
}

Scalar::Scalar(Phase ph, QRat qp, FracMono m)
    : phase(ph), qpart(std::move(qp)), mono(std::move(m)) {
  normalize();
}

void Scalar::normalize() {
  if (qpart.is_zero()) {
    phase = Phase();
    mono = FracMono();
    return;
  }
  BigRat qe = mono.exp("q");
  if (qe != 0 && rat_den(qe) == 1) {
    long k = static_cast<long>(rat_num(qe));
    qpart *= QRat::q_power(k);
    mono.set("q", 0);
  }
  if (qpart.lead_coeff() < 0) {
    qpart = -qpart;
    phase = phase * Phase::minus_one();
  }
}

Scalar Scalar::operator*(const Scalar& o) const {
  return Scalar(phase * o.phase, qpart * o.qpart, mono * o.mono);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::invalid_argument("Scalar: inverse of zero");
  return Scalar(phase.inverse(), qpart.inverse(), mono.inverse());
}

bool Scalar::operator==(const Scalar& o) const {
  return phase == o.phase && qpart == o.qpart && mono == o.mono;
}

std::string Scalar::str() const {
  std::ostringstream os;
  os << phase.str() << " * (" << qpart.str() << ")";
  if (!mono.is_one()) os << " * " << mono.str();
  return os.str();
}

}  // namespace slmn
