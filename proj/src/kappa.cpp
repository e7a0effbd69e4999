#include "slmn/kappa.hpp"

#include <sstream>
#include <stdexcept>

#include "slmn/series.hpp"

namespace slmn {

PochExpr& PochExpr::mul_scalar(const Scalar& s) {
  scalar_ = scalar_ * s;
  return *this;
}

PochExpr& PochExpr::mul_bin(long b, int dir, int exp) {
  if (exp == 0) return *this;
  if (dir == -1) {
    // (1 - q^b / x) = -q^b x^{-1} (1 - q^{-b} x)
    Scalar mono(Phase::minus_one(), QRat::q_power(b), FracMono::of(var_, BigRat(-1)));
    for (int i = 0; i < std::abs(exp); ++i)
      scalar_ = scalar_ * (exp > 0 ? mono : mono.inverse());
    b = -b;
  }
  auto it = bins_.emplace(b, 0).first;
  it->second += exp;
  if (it->second == 0) bins_.erase(it);
  return *this;
}

PochExpr& PochExpr::mul_poch(long a, long p, int dir, int exp) {
  if (p <= 0) throw std::invalid_argument("PochExpr: Pochhammer step must be positive");
  if (exp == 0) return *this;
  // Canonicalize the base into (0, p] by peeling binomial factors:
  //   (q^a x; q^p) = (1 - q^a x)(q^{a+p} x; q^p).
  while (a <= 0) {
    mul_bin(a, dir, exp);
    a += p;
  }
  while (a > p) {
    a -= p;
    mul_bin(a, dir, -exp);
  }
  auto it = poch_.emplace(Key{a, p, dir}, 0).first;
  it->second += exp;
  if (it->second == 0) poch_.erase(it);
  return *this;
}

PochExpr PochExpr::operator*(const PochExpr& o) const {
  if (var_ != o.var_) throw std::invalid_argument("PochExpr: variable mismatch");
  PochExpr r = *this;
  r.scalar_ = r.scalar_ * o.scalar_;
  for (const auto& [k, e] : o.poch_) r.mul_poch(k.a, k.p, k.dir, e);
  for (const auto& [b, e] : o.bins_) r.mul_bin(b, 1, e);
  return r;
}

PochExpr PochExpr::inverse() const {
  PochExpr r(var_);
  r.scalar_ = scalar_.inverse();
  for (const auto& [k, e] : poch_) r.poch_[k] = -e;
  for (const auto& [b, e] : bins_) r.bins_[b] = -e;
  return r;
}

PochExpr PochExpr::shift_arg(long k) const {
  PochExpr r(var_);
  // Scalar: substitute x -> q^k x in the fractional monomial.
  Scalar s = scalar_;
  BigRat xe = s.mono.exp(var_);
  if (xe != 0) {
    FracMono extra = FracMono::of("q", xe * k);
    s = Scalar(s.phase, s.qpart, s.mono * extra);
  }
  r.scalar_ = s;
  for (const auto& [key, e] : poch_) r.mul_poch(key.a + key.dir * k, key.p, key.dir, e);
  for (const auto& [b, e] : bins_) r.mul_bin(b + k, 1, e);
  return r;
}

PochExpr PochExpr::invert_arg(long k) const {
  // x -> q^k / x
  PochExpr r(var_);
  Scalar s = scalar_;
  BigRat xe = s.mono.exp(var_);
  if (xe != 0) {
    FracMono m = s.mono;
    m.set(var_, -xe);
    m.set("q", m.exp("q") + xe * k);
    s = Scalar(s.phase, s.qpart, m);
  }
  r.scalar_ = s;
  for (const auto& [key, e] : poch_) r.mul_poch(key.a + k * key.dir, key.p, -key.dir, e);
  for (const auto& [b, e] : bins_) r.mul_bin(b + k, -1, e);
  return r;
}

bool PochExpr::equals(const PochExpr& o) const {
  return var_ == o.var_ && scalar_ == o.scalar_ && poch_ == o.poch_ && bins_ == o.bins_;
}

std::optional<Scalar> PochExpr::eval_at_one() const {
  // At x = 1 the direction is immaterial, so factors cancel pairwise per
  // (a, p); anything left would be a genuine infinite product.
  std::map<std::pair<long, long>, int> net;
  for (const auto& [k, e] : poch_) net[{k.a, k.p}] += e;
  for (const auto& [ap, e] : net)
    if (e != 0) return std::nullopt;
  Scalar s = scalar_;
  FracMono m = s.mono;
  m.set(var_, 0);
  s = Scalar(s.phase, s.qpart, m);
  QRat extra(1);
  for (const auto& [b, e] : bins_) {
    QRat bin = QRat(1) - QRat::q_power(b);
    if (bin.is_zero()) return std::nullopt;  // (1 - q^0) = 0 at x = 1
    extra *= bin.pow(e);
  }
  return s * Scalar::of_qrat(extra);
}

std::optional<MRat> PochExpr::rational_part() const {
  if (!poch_.empty()) return std::nullopt;
  MRat x = MRat::variable(var_);
  MRat r = MRat::one();
  for (const auto& [b, e] : bins_) r *= (MRat::one() - MRat(QRat::q_power(b)) * x).pow(e);
  return r;
}

QRat PochExpr::log_coeff(long m, int dir) const {
  QRat s;
  for (const auto& [k, e] : poch_)
    if (k.dir == dir) s += poch_log_coeff(k.a, k.p, m) * QRat(e);
  if (dir == 1)
    for (const auto& [b, e] : bins_) s += binomial_log_coeff(b, m, 1) * QRat(e);
  return s;
}

MRat PochExpr::log_kernel_sym(int dir, const std::string& uvar) const {
  // m * [x^{dir*m}] log(...) with q^m = U^2:
  //   Pochhammer (q^a x^dir; q^p): -U^{2a} / (1 - U^{2p});
  //   binomial (1 - q^b x): -U^{2b}.
  MRat s;
  auto U = [&](long k) { return MRat::variable(uvar, static_cast<int>(k)); };
  for (const auto& [k, e] : poch_)
    if (k.dir == dir) s += MRat(QRat(-e)) * U(2 * k.a) / (MRat::one() - U(2 * k.p));
  if (dir == 1)
    for (const auto& [b, e] : bins_) s += MRat(QRat(-e)) * U(2 * b);
  return s;
}

Dec50 pochhammer_value(const Dec50& q0, long a, long p, const Dec50& tail) {
  Dec50 prod = 1;
  Dec50 t = pow(q0, static_cast<int>(a));
  Dec50 step = pow(q0, static_cast<int>(p));
  while (abs(t) > tail) {
    prod *= (1 - t);
    t *= step;
  }
  return prod;
}

Dec50 PochExpr::eval_abs(const Dec50& q0, const Dec50& x0, const Dec50& tail) const {
  Dec50 v = scalar_.qpart.eval(q0);
  if (v < 0) throw std::domain_error("PochExpr::eval_abs: negative qpart after normalization");
  for (const auto& [var, ex] : scalar_.mono.exps()) {
    Dec50 base = var == "q" ? q0 : x0;
    v *= pow(base, to_dec50(ex));
  }
  for (const auto& [k, e] : poch_) {
    Dec50 arg = pow(q0, static_cast<int>(k.a)) * (k.dir == 1 ? x0 : 1 / x0);
    Dec50 step = pow(q0, static_cast<int>(k.p));
    if (abs(arg) >= 1) throw std::domain_error("PochExpr::eval_abs: factor argument >= 1");
    Dec50 prod = 1, t = arg;
    while (abs(t) > tail) {
      prod *= (1 - t);
      t *= step;
    }
    v *= pow(prod, e);
  }
  for (const auto& [b, e] : bins_) {
    Dec50 f = 1 - pow(q0, static_cast<int>(b)) * x0;
    v *= pow(f, e);
  }
  if (v < 0) throw std::domain_error("PochExpr::eval_abs: negative modulus");
  return v;
}

std::string PochExpr::str() const {
  std::ostringstream os;
  os << scalar_.str();
  for (const auto& [k, e] : poch_)
    os << " * (q^" << k.a << (k.dir == 1 ? "*" : "/") << var_ << "; q^" << k.p << ")^" << e;
  for (const auto& [b, e] : bins_) os << " * (1 - q^" << b << "*" << var_ << ")^" << e;
  return os.str();
}

namespace {
void require_mn(int M, int N) {
  if (M < 1 || N < 1 || M == N) throw std::invalid_argument("kappa: need M,N >= 1, M != N");
}
FracMono zfrac(const std::string& var, const BigRat& e) { return FracMono::of(var, e); }
}  // namespace

PochExpr kappa_vv(RKind kind, int M, int N, const std::string& var) {
  require_mn(M, N);
  PochExpr k(var);
  BigRat inv_mn = frac(1, M - N);
  if (kind == RKind::I) {
    if (M > N) {
      long p = 2L * (M - N);
      k.mul_scalar(Scalar(Phase::minus_one(), QRat(1), zfrac(var, BigRat(1) - inv_mn)));
      k.mul_poch(2, p, -1, 1);
      k.mul_poch(p, p, 1, 1);
      k.mul_poch(2, p, 1, -1);
      k.mul_poch(p, p, -1, -1);
    } else {
      long p = 2L * (N - M);
      k.mul_scalar(Scalar(Phase(), QRat(1), zfrac(var, BigRat(1) - inv_mn)));
      k.mul_poch(p, p, -1, 1);
      k.mul_poch(p + 2, p, 1, 1);
      k.mul_poch(p, p, 1, -1);
      k.mul_poch(p + 2, p, -1, -1);
    }
  } else {
    if (M > N) {
      long p = 2L * (M - N);
      k.mul_scalar(Scalar(Phase::minus_one(), QRat(1), zfrac(var, inv_mn)));
      k.mul_poch(p, p, 1, 1);
      k.mul_poch(p - 2, p, -1, 1);
      k.mul_poch(p, p, -1, -1);
      k.mul_poch(p - 2, p, 1, -1);
    } else {
      long p = 2L * (N - M);
      k.mul_scalar(Scalar(Phase(), QRat(1), zfrac(var, BigRat(-1) + inv_mn)));
      k.mul_poch(-2, p, 1, 1);
      k.mul_poch(p, p, -1, 1);
      k.mul_poch(-2, p, -1, -1);
      k.mul_poch(p, p, 1, -1);
    }
  }
  return k;
}

PochExpr kappa_vstar_vstar(RKind kind, int M, int N, const std::string& var) {
  require_mn(M, N);
  PochExpr k = kappa_vv(kind, M, N, var);
  if (kind == RKind::I) {
    if (M > N) {
      k.mul_scalar(Scalar(Phase::minus_one(), QRat(1), FracMono()));
    } else {
      k.mul_scalar(Scalar(Phase::minus_one(), QRat(1), zfrac(var, BigRat(-1))));
    }
  }
  return k;
}

PochExpr kappa_vstar_v(RKind kind, int M, int N, const std::string& var) {
  return kappa_vstar_vstar(kind, M, N, var).invert_arg(0);
}

PochExpr kappa_v_vstar(RKind kind, int M, int N, const std::string& var) {
  return kappa_vstar_vstar(kind, M, N, var).invert_arg(2L * (N - M));
}

PochExpr chi_fun(int M, int N, const std::string& var) {
  require_mn(M, N);
  // The display defines chi at argument q^{M-N} z; substitute to plain z.
  PochExpr k(var);
  BigRat inv_mn = frac(1, M - N);
  if (M > N) {
    long p = 2L * (M - N);
    k.mul_scalar(Scalar(Phase(), QRat(1), zfrac(var, -inv_mn)));
    k.mul_poch(M - N - 1, p, 1, 1);
    k.mul_poch(M - N + 1, p, -1, 1);
    k.mul_poch(M - N - 1, p, -1, -1);
    k.mul_poch(M - N + 1, p, 1, -1);
  } else {
    long p = 2L * (N - M);
    k.mul_scalar(Scalar(Phase(), QRat(1), zfrac(var, -inv_mn)));
    k.mul_poch(N - M + 1, p, 1, 1);
    k.mul_poch(N - M - 1, p, -1, 1);
    k.mul_poch(N - M + 1, p, -1, -1);
    k.mul_poch(N - M - 1, p, 1, -1);
  }
  return k.shift_arg(-(M - N));
}

}  // namespace slmn
