#include "slmn/checks.hpp"

#include <chrono>

namespace slmn {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

Json mismatch_witness(const GradedMat& a, const GradedMat& b) {
  auto mm = a.first_mismatch(b);
  if (!mm) return Json();
  Json w;
  w["row"] = mm->first;
  w["col"] = mm->second;
  w["lhs"] = a.at(mm->first, mm->second).str();
  w["rhs"] = b.at(mm->first, mm->second).str();
  return w;
}

// kappa(z) kappa(1/z) structural product; true iff it reduces to exactly 1.
bool kappa_unitary(const PochExpr& k, Json& why, int K) {
  PochExpr prod = k * k.invert_arg(0);
  if (!prod.is_scalar()) {
    why["residual"] = prod.str();
    return false;
  }
  if (!(prod.scalar() == Scalar::one())) {
    why["scalar"] = prod.scalar().str();
    return false;
  }
  // The same fact as a q-series: every log coefficient vanishes through m = K.
  for (long m = 1; m <= K; ++m)
    for (int dir : {1, -1}) {
      QRat c = k.log_coeff(m, dir) + k.invert_arg(0).log_coeff(m, dir);
      if (!c.is_zero()) {
        why["series_m"] = m;
        why["dir"] = dir;
        return false;
      }
    }
  return true;
}

}  // namespace

CheckReport check_ybe(int M, int N, Convention conv) {
  Timer t;
  CheckReport rep;
  rep.check = "ybe";
  rep.params = {{"M", M}, {"N", N}, {"convention", convention_name(conv)}};
  cartan(M, N);  // validates the parameter range
  Grading g{M, N, conv};
  MRat z1 = MRat::variable("z1"), z2 = MRat::variable("z2"), z3 = MRat::variable("z3");
  GradedMat r12 = embed2(build_rbar_vv(g, z1 / z2), 3, 1, 2);
  GradedMat r13 = embed2(build_rbar_vv(g, z1 / z3), 3, 1, 3);
  GradedMat r23 = embed2(build_rbar_vv(g, z2 / z3), 3, 2, 3);
  GradedMat lhs = r12 * r13 * r23;
  GradedMat rhs = r23 * r13 * r12;
  rep.witness = mismatch_witness(lhs, rhs);
  rep.status = rep.witness.is_null() ? Status::pass : Status::fail;
  rep.ms = t.ms();
  return rep;
}

CheckReport check_unitarity(int M, int N, int K, Convention conv) {
  Timer t;
  CheckReport rep;
  rep.check = "unitarity";
  rep.params = {{"M", M}, {"N", N}, {"K", K}, {"convention", convention_name(conv)}};
  cartan(M, N);
  Grading g{M, N, conv};
  MRat z = MRat::variable("z");
  GradedMat P = graded_permutation(g);
  GradedMat r12 = build_rbar_vv(g, z);
  GradedMat r21_inv = P * build_rbar_vv(g, z.inverse()) * P;
  GradedMat prod = r12 * r21_inv;
  auto scalar = prod.as_scalar_multiple_of_identity();
  Json w;
  if (!scalar) {
    rep.status = Status::fail;
    rep.witness = mismatch_witness(prod, GradedMat::identity(g, 2));
    rep.ms = t.ms();
    return rep;
  }
  bool ok = scalar->equals(MRat::one());
  if (!ok) w["u"] = scalar->str();

  for (RKind kind : {RKind::I, RKind::II}) {
    Json why;
    if (!kappa_unitary(kappa_vv(kind, M, N), why, K)) {
      ok = false;
      w[kind == RKind::I ? "kappa_I" : "kappa_II"] = why;
    }
  }
  // Fractional z-powers of kappa(z) kappa(1/z) cancel exactly; this is part
  // of the structural reduction above.  The canonical form may shift the
  // displayed z-power by integers (binomial peeling), so pin only the
  // fractional part of the exponent.
  PochExpr kI = kappa_vv(RKind::I, M, N);
  BigRat ze = kI.scalar().mono.exp("z");
  BigRat diff = ze - (BigRat(1) - frac(1, M - N));
  if (rat_den(diff) != 1) {
    ok = false;
    w["kappa_I_zpow"] = ze.str();
  }
  rep.status = ok ? Status::pass : Status::fail;
  rep.witness = w.empty() ? Json() : w;
  rep.ms = t.ms();
  return rep;
}

CheckReport check_crossing(int M, int N, int K, Convention conv) {
  Timer t;
  CheckReport rep;
  rep.check = "crossing";
  rep.params = {{"M", M}, {"N", N}, {"K", K}, {"convention", convention_name(conv)}};
  cartan(M, N);
  Grading g{M, N, conv};
  MRat z = MRat::variable("z");
  MRat zshift = MRat(QRat::q_power(2L * (N - M))) * z;
  GradedMat m1 = tensor(mmatrix(g), GradedMat::identity(g, 1));
  GradedMat lhs = build_rbar_vv(g, z).inverse().st1();
  GradedMat rhs = (m1.inverse() * build_rbar_vv(g, zshift) * m1).st1();
  GradedMat prod = lhs * rhs;
  auto scalar = prod.as_scalar_multiple_of_identity();
  Json w;
  bool ok = true;
  if (!scalar) {
    ok = false;
    w["non_scalar"] = true;
  } else {
    // Predicted scalar: kappa(q^{2(N-M)} z)/kappa(z), identical for both
    // normalizations (the shift-invariant content of kappa).
    for (RKind kind : {RKind::I, RKind::II}) {
      PochExpr k = kappa_vv(kind, M, N);
      PochExpr ratio = k.shift_arg(2L * (N - M)) * k.inverse();
      auto rat = ratio.rational_part();
      if (!rat) {
        ok = false;
        w["ratio_not_rational"] = ratio.str();
        continue;
      }
      // Attach the scalar part (q-powers from the fractional z-shift are
      // integers here because (2(N-M)) * (1 - 1/(M-N)) is an integer times
      // the exponent denomin应; verified by Scalar normalization).
      const Scalar& s = ratio.scalar();
      if (!s.mono.is_one() || !s.phase.is_one()) {
        ok = false;
        w["ratio_scalar"] = s.str();
        continue;
      }
      MRat predicted = MRat(s.qpart) * (*rat);
      if (!scalar->equals(predicted)) {
        ok = false;
        w[kind == RKind::I ? "mismatch_I" : "mismatch_II"] =
            Json{{"scalar", scalar->str()}, {"predicted", predicted.str()}};
      }
      // Series form through q^K: compare Laurent expansions in z.
      // Both sides are rational with denominators nonzero at z = 0.
      // (Exact equality above implies it; we expand to honor the stated
      // tolerance and to exercise the series path.)
      if (ok) {
        std::map<VarId, QRat> bind{{var_id("z"), QRat::q_power(1)}};
        QRat lhs_q = scalar->eval(bind);
        QRat rhs_q = predicted.eval(bind);
        QRat diff = lhs_q - rhs_q;
        if (!diff.is_zero() && !diff.series(K).is_zero()) {
          ok = false;
          w["series_mismatch"] = diff.str();
        }
      }
    }
  }
  // Negative control: dropping M (x) 1 must break the scalar identity.
  GradedMat rhs_bad = build_rbar_vv(g, zshift).st1();
  GradedMat prod_bad = lhs * rhs_bad;
  auto scalar_bad = prod_bad.as_scalar_multiple_of_identity();
  bool control_failed = !scalar_bad.has_value();
  if (scalar_bad) {
    // Even if scalar, it must not match the kappa ratio prediction for I.
    PochExpr k = kappa_vv(RKind::I, M, N);
    PochExpr ratio = k.shift_arg(2L * (N - M)) * k.inverse();
    auto rat = ratio.rational_part();
    if (rat) {
      MRat predicted = MRat(ratio.scalar().qpart) * (*rat);
      control_failed = !scalar_bad->equals(predicted);
    }
  }
  if (!control_failed) {
    ok = false;
    w["negative_control"] = "crossing passed without the M-matrix";
  }
  rep.status = ok ? Status::pass : Status::fail;
  rep.witness = w.empty() ? Json() : w;
  rep.ms = t.ms();
  return rep;
}

CheckReport check_initial(int M, int N, Convention conv) {
  Timer t;
  CheckReport rep;
  rep.check = "initial";
  rep.params = {{"M", M}, {"N", N}, {"convention", convention_name(conv)}};
  cartan(M, N);
  Grading g{M, N, conv};
  GradedMat rbar1 = build_rbar_vv(g, MRat(QRat(1)));
  GradedMat P = graded_permutation(g);
  Json w;
  for (RKind kind : {RKind::I, RKind::II}) {
    auto k1 = kappa_vv(kind, M, N).eval_at_one();
    std::string label = kind == RKind::I ? "I" : "II";
    if (!k1) {
      w[label] = "kappa(1) did not collapse";
      continue;
    }
    QRat kval;
    if (k1->phase.is_one()) kval = k1->qpart;
    else if (k1->phase.is_minus_one()) kval = -k1->qpart;
    else {
      w[label] = "kappa(1) not real: " + k1->str();
      continue;
    }
    // R^{(i)}(1) = R-bar(1)/kappa(1) compared against P.
    GradedMat R1 = rbar1.scaled(MRat(kval.inverse()));
    if (R1 == P) {
      w[label] = "equal";
    } else if (R1.scaled(MRat(QRat(-1))) == P) {
      w[label] = "equal-up-to-global-sign";
    } else {
      w[label] = "mismatch";
    }
    w[label + "_kappa_at_1"] = kval.str();
  }
  rep.status = Status::report_only;
  rep.witness = w;
  rep.ms = t.ms();
  return rep;
}

CheckReport check_rmatrix_derived(int M, int N, Convention conv) {
  Timer t;
  CheckReport rep;
  rep.check = "rmatrix-derived";
  rep.params = {{"M", M}, {"N", N}, {"convention", convention_name(conv)}};
  cartan(M, N);
  Grading g{M, N, conv};
  Json w;
  bool ok = true;

  GradedMat vsv = build_rbar_derived(RDerivedKind::VstarV, g, "z");
  GradedMat vsv_explicit = rbar_vstar_v_explicit(g, "z");
  if (!(vsv == vsv_explicit)) {
    ok = false;
    w["VstarV"] = mismatch_witness(vsv, vsv_explicit);
  }

  GradedMat vvs = build_rbar_derived(RDerivedKind::VVstar, g, "z");
  GradedMat vvs_explicit = rbar_v_vstar_explicit(g, "z");
  if (!(vvs == vvs_explicit)) {
    ok = false;
    w["VVstar"] = mismatch_witness(vvs, vvs_explicit);
  }
  // The literal printed display carries the two parity markers swapped; the
  // comparison against it is recorded, not required.
  GradedMat vvs_printed = rbar_v_vstar_explicit(g, "z", /*as_printed=*/true);
  w["VVstar_as_printed"] = (vvs == vvs_printed) ? "equal" : "mismatch";

  // (R-bar_{V*V*})_{k1,k2}^{j1,j2} = (R-bar_{VV})_{j1,j2}^{k1,k2}.
  GradedMat vss = build_rbar_derived(RDerivedKind::VstarVstar, g, "z");
  GradedMat vv = build_rbar_vv(g, MRat::variable("z"));
  bool transpose_ok = true;
  for (int r = 0; r < vv.dim() && transpose_ok; ++r)
    for (int c = 0; c < vv.dim(); ++c)
      if (!vss.at(r, c).equals(vv.at(c, r))) {
        transpose_ok = false;
        break;
      }
  if (!transpose_ok) {
    ok = false;
    w["VstarVstar_transpose"] = "failed";
  }

  // Unitary relation R_{VV*}(z) R_{V*V}(1/z) = 1.  At the un-normalized
  // level the product is scalar * Id with scalar kappa_{V*V}(1/z) *
  // kappa_{VV*}(z), so dividing by the normalizations gives the identity
  // exactly.  (The section-3.1 sentence states this with R-bar symbols; the
  // scalar is recorded in the witness.)
  GradedMat vsv_inv_arg(g, 2);
  {
    VarId zv = var_id("z");
    for (int r = 0; r < vsv.dim(); ++r)
      for (int c = 0; c < vsv.dim(); ++c)
        if (!vsv.at(r, c).is_zero())
          vsv_inv_arg.at(r, c) = vsv.at(r, c).subst_monomial(zv, QRat(1), zv, -1);
  }
  GradedMat unit = vvs * vsv_inv_arg;
  auto unit_scalar = unit.as_scalar_multiple_of_identity();
  if (!unit_scalar) {
    ok = false;
    w["unitary_VVstar_VstarV"] = "product not scalar";
  } else {
    w["unitary_rbar_scalar"] = unit_scalar->str();
    bool both = true;
    for (RKind kind : {RKind::I, RKind::II}) {
      PochExpr kp = kappa_vstar_v(kind, M, N).invert_arg(0) * kappa_v_vstar(kind, M, N);
      auto rat = kp.rational_part();
      const Scalar& s = kp.scalar();
      if (!rat || !s.mono.is_one() || !s.phase.is_one()) {
        both = false;
        continue;
      }
      if (!unit_scalar->equals(MRat(s.qpart) * (*rat))) both = false;
    }
    if (!both) {
      ok = false;
      w["unitary_scalar_vs_kappa"] = "mismatch";
    }
  }

  // Weight conservation (dualized on the starred legs) and the -1 diagonal
  // of R-bar_{V*V} for j <= M.
  if (!vsv.weight_conserving_dual(true, false) || !vvs.weight_conserving_dual(false, true) ||
      !vv.weight_conserving() || !vss.weight_conserving()) {
    ok = false;
    w["weight_conservation"] = "violated";
  }
  for (int j = 1; j <= g.M; ++j) {
    if (!vsv.at(vsv.flatten({j, j}), vsv.flatten({j, j})).equals(MRat(QRat(-1)))) {
      ok = false;
      w["VstarV_diag"] = j;
    }
  }

  rep.status = ok ? Status::pass : Status::fail;
  rep.witness = w.empty() ? Json() : w;
  rep.ms = t.ms();
  return rep;
}

}  // namespace slmn
