#include "slmn/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace slmn {

namespace {
std::mutex g_var_mutex;
std::vector<std::string> g_var_names;
std::unordered_map<std::string, VarId> g_var_ids;
}  // namespace

VarId var_id(const std::string& name) {
  std::lock_guard<std::mutex> lock(g_var_mutex);
  auto it = g_var_ids.find(name);
  if (it != g_var_ids.end()) return it->second;
  VarId id = static_cast<VarId>(g_var_names.size());
  g_var_names.push_back(name);
  g_var_ids.emplace(name, id);
  return id;
}

const std::string& var_name(VarId id) {
  std::lock_guard<std::mutex> lock(g_var_mutex);
  return g_var_names.at(id);
}

Mono Mono::of(VarId v, int exp) {
  Mono m;
  if (exp != 0) m.e.emplace_back(v, exp);
  return m;
}

int Mono::exp(VarId v) const {
  for (const auto& [var, ex] : e)
    if (var == v) return ex;
  return 0;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  r.e.reserve(e.size() + o.e.size());
  size_t i = 0, j = 0;
  while (i < e.size() && j < o.e.size()) {
    if (e[i].first < o.e[j].first) {
      r.e.push_back(e[i++]);
    } else if (e[i].first > o.e[j].first) {
      r.e.push_back(o.e[j++]);
    } else {
      int s = e[i].second + o.e[j].second;
      if (s != 0) r.e.emplace_back(e[i].first, s);
      ++i;
      ++j;
    }
  }
  while (i < e.size()) r.e.push_back(e[i++]);
  while (j < o.e.size()) r.e.push_back(o.e[j++]);
  return r;
}

Mono Mono::inverse() const {
  Mono r = *this;
  for (auto& [v, ex] : r.e) ex = -ex;
  return r;
}

Mono Mono::pow(int k) const {
  Mono r;
  if (k == 0) return r;
  r = *this;
  for (auto& [v, ex] : r.e) ex *= k;
  return r;
}

std::string Mono::str() const {
  if (e.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, ex] : e) {
    if (!first) os << "*";
    os << var_name(v);
    if (ex != 1) os << "^" << ex;
    first = false;
  }
  return os.str();
}

MPoly MPoly::term(const Mono& m, const QRat& c) {
  MPoly p;
  if (!c.is_zero()) p.t_[m] = c;
  return p;
}

MPoly MPoly::variable(const std::string& name, int exp) {
  return term(Mono::of(var_id(name), exp), QRat(1));
}

QRat MPoly::coeff(const Mono& m) const {
  auto it = t_.find(m);
  return it == t_.end() ? QRat::zero() : it->second;
}

void MPoly::add_term(const Mono& m, const QRat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  for (const auto& [m, c] : o.t_) r.add_term(m, -c);
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  if (is_zero() || o.is_zero()) return r;
  for (const auto& [m1, c1] : t_)
    for (const auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
  return r;
}

MPoly MPoly::scaled(const QRat& s) const {
  MPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, c] : t_) r.t_[m] = c * s;
  return r;
}

MPoly MPoly::mul_mono(const Mono& mm) const {
  MPoly r;
  for (const auto& [m, c] : t_) r.t_[m * mm] = c;
  return r;
}

MPoly MPoly::subst_monomial(VarId v, const QRat& c, VarId target, int texp) const {
  if (c.is_zero()) throw std::invalid_argument("subst_monomial: zero coefficient");
  MPoly r;
  for (const auto& [m, co] : t_) {
    int ev = m.exp(v);
    if (ev == 0) {
      r.add_term(m, co);
      continue;
    }
    Mono rest;
    for (const auto& p : m.e)
      if (p.first != v) rest.e.push_back(p);
    rest = rest * Mono::of(target, ev * texp);
    r.add_term(rest, co * c.pow(ev));
  }
  return r;
}

MPoly MPoly::subst_const(VarId v, const QRat& value) const {
  MPoly r;
  for (const auto& [m, co] : t_) {
    int ev = m.exp(v);
    if (ev == 0) {
      r.add_term(m, co);
      continue;
    }
    if (value.is_zero()) {
      if (ev > 0) continue;  // term vanishes
      throw std::domain_error("subst_const: zero substituted into negative power");
    }
    Mono rest;
    for (const auto& p : m.e)
      if (p.first != v) rest.e.push_back(p);
    r.add_term(rest, co * value.pow(ev));
  }
  return r;
}

QRat MPoly::eval(const std::map<VarId, QRat>& binding) const {
  QRat acc = QRat::zero();
  for (const auto& [m, co] : t_) {
    QRat v = co;
    for (const auto& [var, ex] : m.e) {
      auto it = binding.find(var);
      if (it == binding.end()) throw std::invalid_argument("eval: unbound variable " + var_name(var));
      v *= it->second.pow(ex);
    }
    acc += v;
  }
  return acc;
}

std::map<VarId, int> MPoly::min_exps() const {
  // Per-variable minimum exponent over all terms; a variable absent from a
  // term counts as exponent 0 there.  Entries with min 0 are dropped.
  std::map<VarId, int> mins;
  for (VarId v : variables()) {
    int lo = t_.begin()->first.exp(v);
    for (const auto& [m, c] : t_) lo = std::min(lo, m.exp(v));
    if (lo != 0) mins[v] = lo;
  }
  return mins;
}

bool MPoly::uses(VarId v) const {
  for (const auto& [m, c] : t_)
    if (m.exp(v) != 0) return true;
  return false;
}

std::vector<VarId> MPoly::variables() const {
  std::vector<VarId> vars;
  for (const auto& [m, c] : t_)
    for (const auto& [v, ex] : m.e)
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

std::string MPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (!m.is_unit()) os << "*" << m.str();
    first = false;
  }
  return os.str();
}

MRat::MRat(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("MRat: zero denominator");
  normalize();
}

void MRat::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::one();
    return;
  }
  auto mins = den_.min_exps();
  if (!mins.empty()) {
    Mono shift;
    for (const auto& [v, ex] : mins)
      if (ex != 0) shift.e.emplace_back(v, -ex);
    if (!shift.e.empty()) {
      den_ = den_.mul_mono(shift);
      num_ = num_.mul_mono(shift);
    }
  }
  const QRat& lead = den_.terms().begin()->second;
  if (!lead.is_one()) {
    QRat inv = lead.inverse();
    den_ = den_.scaled(inv);
    num_ = num_.scaled(inv);
  }
}

bool MRat::equals(const MRat& o) const {
  if (den_ == o.den_) return num_ == o.num_;
  return (num_ * o.den_) == (o.num_ * den_);
}

MRat MRat::operator-() const {
  MRat r = *this;
  r.num_ = -r.num_;
  return r;
}

MRat MRat::operator+(const MRat& o) const {
  if (den_ == o.den_) return MRat(num_ + o.num_, den_);
  return MRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

MRat MRat::operator-(const MRat& o) const { return *this + (-o); }

MRat MRat::operator*(const MRat& o) const { return MRat(num_ * o.num_, den_ * o.den_); }

MRat MRat::operator/(const MRat& o) const {
  if (o.is_zero()) throw std::invalid_argument("MRat: division by zero");
  return MRat(num_ * o.den_, den_ * o.num_);
}

MRat MRat::inverse() const {
  if (is_zero()) throw std::invalid_argument("MRat: inverse of zero");
  return MRat(den_, num_);
}

MRat MRat::pow(long e) const {
  if (e == 0) return one();
  MRat base = e > 0 ? *this : inverse();
  long n = e > 0 ? e : -e;
  MRat acc = one();
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

MRat MRat::subst_monomial(VarId v, const QRat& c, VarId target, int texp) const {
  MPoly d = den_.subst_monomial(v, c, target, texp);
  if (d.is_zero()) throw std::domain_error("substitution produced zero denominator");
  return MRat(num_.subst_monomial(v, c, target, texp), d);
}

MRat MRat::subst_const(VarId v, const QRat& value) const {
  MPoly d = den_.subst_const(v, value);
  if (d.is_zero()) throw std::domain_error("substitution produced zero denominator");
  return MRat(num_.subst_const(v, value), d);
}

QRat MRat::eval(const std::map<VarId, QRat>& binding) const {
  QRat d = den_.eval(binding);
  if (d.is_zero()) throw std::domain_error("MRat::eval: denominator vanished");
  return num_.eval(binding) / d;
}

bool MRat::is_constant() const {
  return num_.variables().empty() && den_.variables().empty();
}

QRat MRat::as_qrat() const {
  if (!is_constant()) throw std::logic_error("MRat::as_qrat: not a constant: " + str());
  if (num_.is_zero()) return QRat::zero();
  return num_.terms().begin()->second / den_.terms().begin()->second;
}

std::string MRat::str() const {
  if (den_ == MPoly::one()) return num_.str();
  return "[" + num_.str() + "] / [" + den_.str() + "]";
}

}  // namespace slmn
