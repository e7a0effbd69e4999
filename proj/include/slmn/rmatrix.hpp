#pragma once

#include <optional>
#include <string>

#include "slmn/cartan.hpp"
#include "slmn/gmat.hpp"
#include "slmn/kappa.hpp"

namespace slmn {

// a(z) = (z - q^2)/(1 - q^2 z),  b(z) = (1 - z)q/(1 - q^2 z),
// c(z) = (1 - q^2)/(1 - q^2 z); built over the argument's cleared common
// denominator so sums of entries share denominators structurally.
struct ABC {
  MRat a, b, c, zc;  // zc = z * c(z)
};
ABC abc(const MRat& z);

// R-bar_{VV}(z) as a two-leg action matrix.
GradedMat build_rbar_vv(const Grading& g, const MRat& z);

// 2 rho_j for j = 1..M+N (integers; the two arithmetic progressions).
std::vector<long> two_rho(int M, int N);

// diag(q^{2 rho_j}) on one leg.
GradedMat mmatrix(const Grading& g);

enum class RDerivedKind { VstarV, VVstar, VstarVstar };

// Derived families: the defining construction (inverse / conjugated / st12).
GradedMat build_rbar_derived(RDerivedKind kind, const Grading& g, const std::string& zvar);

// The paper's explicit closed forms for R-bar_{V*V} and R-bar_{VV*}.  The
// VV* display's two parity markers only reproduce the defining construction
// when interchanged; `as_printed = true` keeps the literal display.
GradedMat rbar_vstar_v_explicit(const Grading& g, const std::string& zvar);
GradedMat rbar_v_vstar_explicit(const Grading& g, const std::string& zvar,
                                bool as_printed = false);

}  // namespace slmn
