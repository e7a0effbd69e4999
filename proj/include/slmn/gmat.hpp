#pragma once

#include <functional>
#include <string>
#include <vector>

#include "slmn/mpoly.hpp"

namespace slmn {

enum class Convention { paper, flipped };

std::string convention_name(Convention c);

// Z2-grading data on V = V_1 (+) V_0 of dimension M+N.  Basis indices run
// 1..M+N; signature nu_j = +1 for j <= M and -1 above.  The paper convention
// assigns parity [v_j] = (nu_j + 1)/2, the flipped one (1 - nu_j)/2.
struct Grading {
  int M = 1, N = 2;
  Convention conv = Convention::paper;

  int dim() const { return M + N; }
  int nu(int j) const { return j <= M ? 1 : -1; }  // j in 1..M+N
  int parity(int j) const {
    int p = j <= M ? 1 : 0;
    return conv == Convention::paper ? p : 1 - p;
  }
};

// Operator on (M+N)^{legs} stored as its action matrix: column = input basis
// multi-index, row = output.  Koszul signs are inserted when operators are
// constructed (tensor products, embeddings), so composition is plain matrix
// multiplication.
class GradedMat {
 public:
  GradedMat(Grading g, int legs);
  static GradedMat identity(Grading g, int legs);

  const Grading& grading() const { return g_; }
  int legs() const { return legs_; }
  int dim() const { return D_; }

  MRat& at(int row, int col) { return a_[static_cast<size_t>(row) * D_ + col]; }
  const MRat& at(int row, int col) const { return a_[static_cast<size_t>(row) * D_ + col]; }

  // Multi-index helpers; indices are 1-based per leg.
  int flatten(const std::vector<int>& idx) const;
  std::vector<int> unflatten(int flat) const;

  GradedMat operator+(const GradedMat& o) const;
  GradedMat operator-(const GradedMat& o) const;
  GradedMat operator*(const GradedMat& o) const;  // composition (Koszul-free on action matrices)
  GradedMat scaled(const MRat& s) const;
  bool operator==(const GradedMat& o) const;
  bool is_zero() const;

  // First entry where the two differ, as (row, col); nullopt if equal.
  std::optional<std::pair<int, int>> first_mismatch(const GradedMat& o) const;

  // Is this scalar * identity?  Returns the scalar if so.
  std::optional<MRat> as_scalar_multiple_of_identity() const;

  // Supertransposes.  The single-leg form is the block map
  // (A,B;C,D) -> (A^t, C^t; -B^t, D^t); st1/st2/st12 are the two-leg
  // componentwise forms.
  GradedMat st() const;
  GradedMat st1() const;
  GradedMat st2() const;
  GradedMat st12() const;

  // Exact inverse exploiting weight conservation: columns are grouped by the
  // multiset of their leg indices and each block is inverted by Gauss-Jordan
  // over MRat.  Throws if a block is singular.
  GradedMat inverse() const;

  bool weight_conserving() const;

  // Weight conservation with dualized legs: a dual leg contributes its
  // output index to the input-side multiset and vice versa (two legs only).
  bool weight_conserving_dual(bool leg1_dual, bool leg2_dual) const;

  std::string str() const;

 private:
  Grading g_;
  int legs_;
  int D_;
  std::vector<MRat> a_;
};

// Graded permutation P(v_j (x) v_k) = (-1)^{[j][k]} v_k (x) v_j.
GradedMat graded_permutation(const Grading& g);

// Tensor product with the graded action rule: the result's action on
// v_{j_1} (x) ... (x) v_{j_n} carries e^{i pi sum_k [S_k] sum_{l<k} [j_l]}.
// Each factor must have a well-defined operator parity on each leg (derived
// entrywise); throws if entries of mixed parity are found on one leg.
GradedMat tensor(const GradedMat& a, const GradedMat& b);

// Embed a 2-leg operator into legs (p,q) of an n-leg space (1-based, p < q).
GradedMat embed2(const GradedMat& r, int nlegs, int p, int q);

// Elementary graded tensor c * E_{k_1,j_1} (x) ... (x) E_{k_n,j_n}; used to
// cross-check the Koszul product rule against action-matrix composition.
struct ETensor {
  MRat coeff;
  std::vector<std::pair<int, int>> legs;  // (k, j) per leg, 1-based

  // (A_1 (x) ... (x) A_n)(B_1 (x) ... (x) B_n) =
  //   (-1)^{sum_{i > l} [A_i][B_l]} (A_1 B_1 (x) ... (x) A_n B_n);
  // zero when inner indices do not match.
  static std::optional<ETensor> mul(const ETensor& x, const ETensor& y, const Grading& g);
  GradedMat to_matrix(const Grading& g) const;
};

}  // namespace slmn
