#pragma once

#include <vector>

#include "slmn/report.hpp"
#include "slmn/rmatrix.hpp"

namespace slmn {

// R-matrix level verifications.  All are exact; series facts are checked
// through q^K where stated.

// Graded Yang-Baxter equation for R-bar on V (x) V (x) V, symbolic z1,z2,z3.
CheckReport check_ybe(int M, int N, Convention conv = Convention::paper);

// R-bar_12(z) R-bar_21(1/z) = Id exactly, and kappa^{(i)}(z) kappa^{(i)}(1/z) = 1
// both structurally and as a q-series through q^K.
CheckReport check_unitarity(int M, int N, int K = 40, Convention conv = Convention::paper);

// Crossing unitarity at the R-bar level: the product is scalar * Id exactly
// and the scalar matches kappa^{(i)}(q^{2(N-M)}z)/kappa^{(i)}(z), exactly and
// as a q-series through q^K.  Includes the negative control with M (x) 1
// replaced by the identity.
CheckReport check_crossing(int M, int N, int K = 40, Convention conv = Convention::paper);

// Initial condition R^{(i)}(1) = P: report-only; records equality,
// equality up to a global sign, or failure, per kind and convention.
CheckReport check_initial(int M, int N, Convention conv);

// Derived families equal the paper's closed forms; R-bar_{V*V*} transpose
// relation; R-bar_{VV*}(z) R-bar_{V*V}(1/z) = Id; weight conservation.
CheckReport check_rmatrix_derived(int M, int N, Convention conv = Convention::paper);

}  // namespace slmn
