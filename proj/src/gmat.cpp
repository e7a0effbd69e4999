#include "slmn/gmat.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace slmn {

std::string convention_name(Convention c) {
  return c == Convention::paper ? "paper" : "flipped";
}

GradedMat::GradedMat(Grading g, int legs) : g_(g), legs_(legs) {
  D_ = 1;
  for (int i = 0; i < legs; ++i) D_ *= g.dim();
  a_.assign(static_cast<size_t>(D_) * D_, MRat::zero());
}

GradedMat GradedMat::identity(Grading g, int legs) {
  GradedMat m(g, legs);
  for (int i = 0; i < m.D_; ++i) m.at(i, i) = MRat::one();
  return m;
}

int GradedMat::flatten(const std::vector<int>& idx) const {
  int f = 0;
  for (int v : idx) f = f * g_.dim() + (v - 1);
  return f;
}

std::vector<int> GradedMat::unflatten(int flat) const {
  std::vector<int> idx(static_cast<size_t>(legs_));
  for (int k = legs_ - 1; k >= 0; --k) {
    idx[static_cast<size_t>(k)] = flat % g_.dim() + 1;
    flat /= g_.dim();
  }
  return idx;
}

GradedMat GradedMat::operator+(const GradedMat& o) const {
  GradedMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

GradedMat GradedMat::operator-(const GradedMat& o) const {
  GradedMat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
  return r;
}

GradedMat GradedMat::operator*(const GradedMat& o) const {
  if (D_ != o.D_) throw std::invalid_argument("GradedMat: dimension mismatch");
  GradedMat r(g_, legs_);
  for (int mid = 0; mid < D_; ++mid) {
    for (int col = 0; col < D_; ++col) {
      const MRat& b = o.at(mid, col);
      if (b.is_zero()) continue;
      for (int row = 0; row < D_; ++row) {
        const MRat& a = at(row, mid);
        if (a.is_zero()) continue;
        r.at(row, col) += a * b;
      }
    }
  }
  return r;
}

GradedMat GradedMat::scaled(const MRat& s) const {
  GradedMat r = *this;
  for (auto& e : r.a_)
    if (!e.is_zero()) e *= s;
  return r;
}

bool GradedMat::operator==(const GradedMat& o) const { return !first_mismatch(o); }

bool GradedMat::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

std::optional<std::pair<int, int>> GradedMat::first_mismatch(const GradedMat& o) const {
  if (D_ != o.D_) return std::make_pair(-1, -1);
  for (int r = 0; r < D_; ++r)
    for (int c = 0; c < D_; ++c)
      if (!at(r, c).equals(o.at(r, c))) return std::make_pair(r, c);
  return std::nullopt;
}

std::optional<MRat> GradedMat::as_scalar_multiple_of_identity() const {
  const MRat& s = at(0, 0);
  for (int r = 0; r < D_; ++r)
    for (int c = 0; c < D_; ++c) {
      if (r == c) {
        if (!at(r, c).equals(s)) return std::nullopt;
      } else if (!at(r, c).is_zero()) {
        return std::nullopt;
      }
    }
  return s;
}

GradedMat GradedMat::st() const {
  if (legs_ != 1) throw std::logic_error("st: single-leg operators only");
  GradedMat r(g_, 1);
  for (int i = 1; i <= D_; ++i)
    for (int j = 1; j <= D_; ++j) {
      // (A,B;C,D) -> (A^t, C^t; -B^t, D^t): sign -1 when source entry sits in
      // the B block, i.e. row in the first sector and column in the second.
      const MRat& src = at(j - 1, i - 1);
      if (src.is_zero()) continue;
      bool b_block = (j <= g_.M && i > g_.M);
      r.at(i - 1, j - 1) = b_block ? -src : src;
    }
  return r;
}

GradedMat GradedMat::st1() const {
  if (legs_ != 2) throw std::logic_error("st1: two-leg operators only");
  GradedMat r(g_, 2);
  int d = g_.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          // (S^{st1})_{i,j}^{k,l} = S_{k,j}^{i,l} (-1)^{[i]([i]+[k])}
          const MRat& src = at(flatten({k, j}), flatten({i, l}));
          if (src.is_zero()) continue;
          int s = g_.parity(i) * (g_.parity(i) + g_.parity(k));
          r.at(flatten({i, j}), flatten({k, l})) = (s % 2) ? -src : src;
        }
  return r;
}

GradedMat GradedMat::st2() const {
  if (legs_ != 2) throw std::logic_error("st2: two-leg operators only");
  GradedMat r(g_, 2);
  int d = g_.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          // (S^{st2})_{i,j}^{k,l} = S_{i,l}^{k,j} (-1)^{[j]([l]+[j])}
          const MRat& src = at(flatten({i, l}), flatten({k, j}));
          if (src.is_zero()) continue;
          int s = g_.parity(j) * (g_.parity(l) + g_.parity(j));
          r.at(flatten({i, j}), flatten({k, l})) = (s % 2) ? -src : src;
        }
  return r;
}

GradedMat GradedMat::st12() const {
  if (legs_ != 2) throw std::logic_error("st12: two-leg operators only");
  GradedMat r(g_, 2);
  int d = g_.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= d; ++l) {
          // (S^{st12})_{i,j}^{k,l} = S_{k,l}^{i,j} (-1)^{([i]+[j])([i]+[j]+[k]+[l])};
          // the sign collapses to +1 on weight-conserving operators.
          const MRat& src = at(flatten({k, l}), flatten({i, j}));
          if (src.is_zero()) continue;
          int pi = g_.parity(i), pj = g_.parity(j), pk = g_.parity(k), pl = g_.parity(l);
          int s = (pi + pj) * (pi + pj + pk + pl);
          r.at(flatten({i, j}), flatten({k, l})) = (s % 2) ? -src : src;
        }
  return r;
}

GradedMat GradedMat::inverse() const {
  // Group basis states by the multiset of their leg indices; a
  // weight-conserving operator is block diagonal in these groups.
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int f = 0; f < D_; ++f) {
    std::vector<int> key = unflatten(f);
    std::sort(key.begin(), key.end());
    groups[key].push_back(f);
  }
  if (!weight_conserving())
    throw std::logic_error("GradedMat::inverse: operator is not weight-conserving");
  GradedMat inv(g_, legs_);
  for (const auto& [key, members] : groups) {
    size_t n = members.size();
    // Gauss-Jordan on the dense block [A | I].
    std::vector<std::vector<MRat>> m(n, std::vector<MRat>(2 * n, MRat::zero()));
    for (size_t r = 0; r < n; ++r) {
      for (size_t c = 0; c < n; ++c) m[r][c] = at(members[r], members[c]);
      m[r][n + r] = MRat::one();
    }
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && m[piv][col].is_zero()) ++piv;
      if (piv == n) throw std::domain_error("GradedMat::inverse: singular block");
      std::swap(m[piv], m[col]);
      MRat d = m[col][col].inverse();
      for (size_t c = 0; c < 2 * n; ++c)
        if (!m[col][c].is_zero()) m[col][c] *= d;
      for (size_t r = 0; r < n; ++r) {
        if (r == col || m[r][col].is_zero()) continue;
        MRat f = m[r][col];
        for (size_t c = 0; c < 2 * n; ++c)
          if (!m[col][c].is_zero()) m[r][c] -= f * m[col][c];
      }
    }
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c)
        if (!m[r][n + c].is_zero()) inv.at(members[r], members[c]) = m[r][n + c];
  }
  return inv;
}

bool GradedMat::weight_conserving_dual(bool leg1_dual, bool leg2_dual) const {
  if (legs_ != 2) throw std::logic_error("weight_conserving_dual: two legs only");
  for (int r = 0; r < D_; ++r)
    for (int c = 0; c < D_; ++c) {
      if (at(r, c).is_zero()) continue;
      std::vector<int> out = unflatten(r), in = unflatten(c);
      std::vector<int> a, b;  // input-side vs output-side multisets
      (leg1_dual ? a : b).push_back(out[0]);
      (leg1_dual ? b : a).push_back(in[0]);
      (leg2_dual ? a : b).push_back(out[1]);
      (leg2_dual ? b : a).push_back(in[1]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
  return true;
}

bool GradedMat::weight_conserving() const {
  for (int r = 0; r < D_; ++r)
    for (int c = 0; c < D_; ++c) {
      if (at(r, c).is_zero()) continue;
      std::vector<int> a = unflatten(r), b = unflatten(c);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return false;
    }
  return true;
}

std::string GradedMat::str() const {
  std::ostringstream os;
  for (int r = 0; r < D_; ++r)
    for (int c = 0; c < D_; ++c)
      if (!at(r, c).is_zero())
        os << "(" << r << "," << c << "): " << at(r, c).str() << "\n";
  return os.str();
}

GradedMat graded_permutation(const Grading& g) {
  GradedMat p(g, 2);
  int d = g.dim();
  for (int j1 = 1; j1 <= d; ++j1)
    for (int j2 = 1; j2 <= d; ++j2) {
      int sign = g.parity(j1) * g.parity(j2);
      p.at(p.flatten({j2, j1}), p.flatten({j1, j2})) = MRat(QRat(sign % 2 ? -1 : 1));
    }
  return p;
}

namespace {

// Operator parity per leg, derived from nonzero entries: [E_{k,j}] = [k]+[j].
// Returns -1 when entries disagree (mixed parity).
int leg_parity(const GradedMat& m, int leg) {
  int par = -2;
  for (int r = 0; r < m.dim(); ++r)
    for (int c = 0; c < m.dim(); ++c) {
      if (m.at(r, c).is_zero()) continue;
      auto ri = m.unflatten(r), ci = m.unflatten(c);
      int p = (m.grading().parity(ri[static_cast<size_t>(leg)]) +
               m.grading().parity(ci[static_cast<size_t>(leg)])) % 2;
      if (par == -2) par = p;
      else if (par != p) return -1;
    }
  return par == -2 ? 0 : par;
}

}  // namespace

GradedMat tensor(const GradedMat& a, const GradedMat& b) {
  if (a.grading().dim() != b.grading().dim())
    throw std::invalid_argument("tensor: incompatible gradings");
  const Grading& g = a.grading();
  int nl = a.legs() + b.legs();
  GradedMat r(g, nl);

  // Parity of each of b's legs must be definite for the action phase.
  std::vector<int> bpar(static_cast<size_t>(b.legs()));
  for (int l = 0; l < b.legs(); ++l) {
    int p = leg_parity(b, l);
    if (p < 0) throw std::logic_error("tensor: mixed-parity leg");
    bpar[static_cast<size_t>(l)] = p;
  }

  for (int ra = 0; ra < a.dim(); ++ra)
    for (int ca = 0; ca < a.dim(); ++ca) {
      if (a.at(ra, ca).is_zero()) continue;
      std::vector<int> cai = a.unflatten(ca);
      int jpar = 0;  // total parity of a's input indices
      for (int v : cai) jpar += g.parity(v);
      for (int rb = 0; rb < b.dim(); ++rb)
        for (int cb = 0; cb < b.dim(); ++cb) {
          if (b.at(rb, cb).is_zero()) continue;
          // Phase: each of b's legs S_k passes a's input indices.
          int sign = 0;
          for (int l = 0; l < b.legs(); ++l) sign += bpar[static_cast<size_t>(l)] * jpar;
          int row = ra * b.dim() + rb;
          int col = ca * b.dim() + cb;
          MRat v = a.at(ra, ca) * b.at(rb, cb);
          r.at(row, col) = (sign % 2) ? -v : v;
        }
    }
  return r;
}

GradedMat embed2(const GradedMat& r2, int nlegs, int p, int q) {
  if (r2.legs() != 2 || p >= q || p < 1 || q > nlegs)
    throw std::invalid_argument("embed2: bad leg positions");
  const Grading& g = r2.grading();
  GradedMat out(g, nlegs);
  int d = g.dim();

  // Decompose r2 = sum R^{j1 j2}_{k1 k2} (-1)^{([k2]+[j2])[j1]}
  //                E_{k1,j1} (x) E_{k2,j2}
  // and act elementary tensors on legs (p,q) with the graded action phase.
  int D = out.dim();
  for (int col = 0; col < D; ++col) {
    std::vector<int> ji = out.unflatten(col);
    int j1 = ji[static_cast<size_t>(p - 1)], j2 = ji[static_cast<size_t>(q - 1)];
    for (int k1 = 1; k1 <= d; ++k1)
      for (int k2 = 1; k2 <= d; ++k2) {
        const MRat& c = r2.at(r2.flatten({k1, k2}), r2.flatten({j1, j2}));
        if (c.is_zero()) continue;
        int decomp = (g.parity(k2) + g.parity(j2)) * g.parity(j1);
        int s1 = (g.parity(k1) + g.parity(j1));  // parity of E_{k1,j1}
        int s2 = (g.parity(k2) + g.parity(j2));
        int act = 0;
        for (int l = 0; l < p - 1; ++l) act += s1 * g.parity(ji[static_cast<size_t>(l)]);
        for (int l = 0; l < q - 1; ++l) act += s2 * g.parity(ji[static_cast<size_t>(l)]);
        std::vector<int> ki = ji;
        ki[static_cast<size_t>(p - 1)] = k1;
        ki[static_cast<size_t>(q - 1)] = k2;
        int row = out.flatten(ki);
        MRat v = ((decomp + act) % 2) ? -c : c;
        out.at(row, col) += v;
      }
  }
  return out;
}

namespace {
// Leg (0,0) marks the identity operator (parity 0).
int etensor_leg_parity(const Grading& g, const std::pair<int, int>& leg) {
  if (leg.first == 0) return 0;
  return (g.parity(leg.first) + g.parity(leg.second)) % 2;
}
}  // namespace

std::optional<ETensor> ETensor::mul(const ETensor& x, const ETensor& y, const Grading& g) {
  if (x.legs.size() != y.legs.size()) throw std::invalid_argument("ETensor::mul: leg mismatch");
  int sign = 0;
  for (size_t i = 0; i < x.legs.size(); ++i)
    for (size_t l = 0; l < i; ++l)
      sign += etensor_leg_parity(g, x.legs[i]) * etensor_leg_parity(g, y.legs[l]);
  ETensor r;
  r.coeff = x.coeff * y.coeff;
  if (sign % 2) r.coeff = -r.coeff;
  for (size_t i = 0; i < x.legs.size(); ++i) {
    if (x.legs[i].first == 0) {
      r.legs.push_back(y.legs[i]);
    } else if (y.legs[i].first == 0) {
      r.legs.push_back(x.legs[i]);
    } else if (x.legs[i].second != y.legs[i].first) {
      return std::nullopt;  // E_{k,j} E_{j',l} = 0 unless j = j'
    } else {
      r.legs.emplace_back(x.legs[i].first, y.legs[i].second);
    }
  }
  return r;
}

GradedMat ETensor::to_matrix(const Grading& g) const {
  GradedMat m(g, static_cast<int>(legs.size()));
  // Expand identity legs into sums over E_{j,j}.
  std::vector<std::pair<int, int>> cur(legs.size());
  std::function<void(size_t)> rec = [&](size_t pos) {
    if (pos == legs.size()) {
      std::vector<int> ki, ji;
      for (const auto& [k, j] : cur) {
        ki.push_back(k);
        ji.push_back(j);
      }
      int act = 0;
      for (size_t i = 0; i < cur.size(); ++i) {
        int si = etensor_leg_parity(g, cur[i]);
        for (size_t l = 0; l < i; ++l) act += si * g.parity(ji[l]);
      }
      MRat v = (act % 2) ? -coeff : coeff;
      m.at(m.flatten(ki), m.flatten(ji)) += v;
      return;
    }
    if (legs[pos].first == 0) {
      for (int j = 1; j <= g.dim(); ++j) {
        cur[pos] = {j, j};
        rec(pos + 1);
      }
    } else {
      cur[pos] = legs[pos];
      rec(pos + 1);
    }
  };
  rec(0);
  return m;
}

}  // namespace slmn
