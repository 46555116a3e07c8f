#pragma once

// Parameter-level map from Hermitian self-orthogonal classical convolutional
// codes to convolutional stabilizer codes, plus the quantum Singleton bound.
// Quantum codes are represented purely by their parameters together with the
// verified self-orthogonality of the underlying classical code.

#include <cstdint>
#include <string>

namespace negaconv {

// (n-k)/2 * (floor(2*gamma/(n+k)) + 1) + gamma + 1 for pure codes.
int quantum_singleton(int n, int k, int gamma);

enum class Purity { kVerified, kAssumed };

struct QuantumConvParams {
  int q = 0;
  int n = 0;
  int k = 0;
  int mu = 0;
  int gamma = 0;
  int d_f = 0;
  bool d_f_exact = false;  // false: certified lower bound only
  bool mds = false;
  Purity purity = Purity::kAssumed;
  std::string d_f_method;
};

// Parameter bookkeeping of the classical-to-quantum map: a self-orthogonal
// (n, v_dim, gamma; mu) code over GF(q^2) yields an
// [(n, n - 2 v_dim, mu; gamma, d_f)]_q stabilizer code with d_f the weight
// of the dual-minus-code set. d_f_exact records whether a witness pinned
// that weight to the dual free distance.
QuantumConvParams stabilizer_from_self_orthogonal(int q, int n, int v_dim, int gamma, int mu,
                                                  bool self_orthogonal, int dual_free_distance,
                                                  bool dual_df_exact, bool witness_outside_code);

// True iff d_f meets the quantum Singleton bound with equality; a certified
// lower bound meeting the bound pins the distance exactly, since a pure
// code cannot exceed it.
bool quantum_mds_check(const QuantumConvParams& params);

}  // namespace negaconv
