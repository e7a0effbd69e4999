#pragma once

#include <stdexcept>
#include <vector>

namespace slmn {

// Cartan data of the affine superalgebra sl^(M|N): signatures nu_i and the
// Cartan matrix A_{i,j} = (nu_i + nu_{i+1}) d_{i,j} - nu_i d_{i,j+1}
//                         - nu_{i+1} d_{i+1,j}, indices mod M+N.
struct CartanData {
  int M, N;
  std::vector<int> nu;              // nu_0 .. nu_{M+N}
  std::vector<std::vector<int>> A;  // (M+N) x (M+N), indices 0..M+N-1

  int a(int i, int j) const {
    int n = M + N;
    return A[static_cast<size_t>(((i % n) + n) % n)][static_cast<size_t>(((j % n) + n) % n)];
  }
};

// Throws std::invalid_argument unless M, N >= 1 and M != N (the kappa and
// phase formulas divide by M - N).
CartanData cartan(int M, int N);

}  // namespace slmn
