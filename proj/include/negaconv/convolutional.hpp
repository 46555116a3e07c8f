#pragma once

// Convolutional codes built by splitting a block parity-check matrix into
// H_0..H_mu: rank conditions, basic/reduced verification through minor
// gcds, the generalized Singleton bound, shifted Hermitian orthogonality,
// bounded-degree Hermitian duals, and exact free distance by state-graph
// search at desk scale.

#include <cstdint>
#include <string>
#include <vector>

#include "negaconv/field.hpp"
#include "negaconv/matrix.hpp"
#include "negaconv/poly.hpp"

namespace negaconv {

// G(D) = mats[0] + mats[1] D + ... ; trailing zero coefficient matrices are
// trimmed so memory() indexes a nonzero matrix (all-zero G keeps one term).
struct PolyMatrix {
  const Field* F = nullptr;
  int rows = 0;
  int cols = 0;
  std::vector<Mat> mats;

  int memory() const { return int(mats.size()) - 1; }
  const Mat& coeff(int j) const { return mats[size_t(j)]; }
  bool is_zero() const;
  // max j with a nonzero entry in this row of mats[j]; -1 for a zero row
  int row_degree(int row) const;
};

PolyMatrix make_poly_matrix(const Field& f, std::vector<Mat> mats);

Mat eval_poly_matrix(const PolyMatrix& g, uint32_t point);

// kappa = max row count among the parts; each part is padded with zero rows
// at the bottom to kappa rows and becomes one coefficient matrix of G(D).
PolyMatrix split_and_pad(const std::vector<Mat>& parts);

struct RankConditionReport {
  int kappa = 0;
  std::vector<int> ranks;
  bool pass = false;  // rk H_0 = kappa and rk H_i <= kappa for i >= 1
};

RankConditionReport check_rank_conditions(const std::vector<Mat>& parts);

struct ConvolutionalCode {
  PolyMatrix G;
  int n = 0;
  int k = 0;  // row count, certified equal to the rank over GF(q^2)(D)
  int gamma = 0;
  int mu = 0;
  std::vector<int> row_degrees;
};

// Computes degrees and certifies rank(G) = rows over the rational function
// field by evaluation (valid because the field has more elements than the
// total degree); throws when the rank is deficient or uncertifiable.
ConvolutionalCode make_conv_code(PolyMatrix g);

// Rank over GF(q)(D) by maximizing the rank of evaluations; requires field
// size > sum of row degrees.
int poly_rank(const PolyMatrix& g);

// Full row rank of the row-wise leading coefficient matrix.
bool is_reduced(const PolyMatrix& g);

struct BasicCheck {
  enum class Status { kVerified, kNotBasic, kDeferred };
  Status status = Status::kDeferred;
  int gcd_degree = -1;
  uint64_t minors = 0;
  std::string detail;
};

// gcd of all k x k minors of G(D), each computed by evaluation at
// gamma + 1 points and Lagrange interpolation; basic iff the gcd is a
// nonzero constant. Deferred when the estimated work exceeds ops_budget.
BasicCheck verify_basic(const PolyMatrix& g, uint64_t ops_budget);

// Eq-style generalized Singleton bound (n-k)(floor(gamma/k) + 1) + gamma + 1.
int generalized_singleton(int n, int k, int gamma);

// True iff sum_j row_a(G_j) . row_b(G_{j+t})^q = 0 for every row pair and
// every shift |t| <= memory; q is the conjugation base with q^2 = |F|.
bool shifted_hermitian_orthogonal(const PolyMatrix& g);

// Conjugation base q of a GF(q^2) field; throws if the size is not a square.
int conj_base(const Field& f);

struct DualBasis {
  PolyMatrix M;
  std::vector<int> row_degrees;
  int cap_searched = 0;
  int dim_slice_cap = 0;    // dim of the degree <= cap orthogonal slice
  int dim_slice_cap1 = 0;   // dim at cap + 1
  bool dims_match = false;  // both slice dims equal the row-degree prediction
  bool reduced = false;
  bool orthogonal = false;  // definitional recheck against G
  BasicCheck basic;
  // all of the above hold: M generates the full Hermitian dual module
  bool complete() const {
    return dims_match && reduced && orthogonal &&
           basic.status == BasicCheck::Status::kVerified;
  }
};

// Finds n - k rows v(D) of degree <= cap with every shifted Hermitian inner
// product against rows of G equal to zero and polynomial rank n - k. The
// semilinear system is solved in the entrywise q-th powers of the unknowns;
// unknown blocks are ordered by ascending degree so the reduced null basis
// is degree-stratified and the greedy selection yields minimal row degrees.
// Escalates cap by 1 up to cap_max when the rank falls short.
DualBasis dual_basis_bounded(const PolyMatrix& g, int cap, int cap_max,
                             uint64_t basic_ops_budget);

struct FreeDistanceOptions {
  uint64_t state_budget = 100000;        // max q^gamma states
  uint64_t work_budget = 1000000000;     // est states * branches * span * n
  uint64_t run_budget = UINT64_MAX;      // user budget on states * branches
  int weight_cap = 0;                    // 0 = caller supplies Singleton-based cap
};

struct FreeDistanceResult {
  int value = 0;
  bool exact = false;
  bool ran = false;
  bool budget_blocked = false;  // desk feasible but user budget too small
  std::string method;
  int weight_cap = 0;
  uint64_t states = 0;
};

// Exact free distance by Dijkstra over the controller-canonical state graph:
// states are memory contents, rows of degree zero are free symbols minimized
// per edge. Exact when the best excursion weight is below weight_cap.
FreeDistanceResult free_distance_search(const ConvolutionalCode& c,
                                        const FreeDistanceOptions& opt);

// min(d0 + dmu, d_block) <= d_f(dual) <= d_block; pinned when equal.
std::pair<int, int> free_distance_bracket(int d0, int dmu, int d_block);

// Membership of a polynomial row vector in the row module of a reduced G:
// solves u(D) G(D) = w(D) with deg u <= deg w as a linear system.
bool in_row_module(const PolyMatrix& g, const std::vector<std::vector<uint32_t>>& w_blocks);

}  // namespace negaconv
