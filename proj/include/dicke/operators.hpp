#pragma once

#include "dicke/hilbert.hpp"

#include <Eigen/Dense>

#include <limits>

namespace dicke {

/// Resonant Tavis-Cummings parameters (hbar = 1, omega_c = omega_a = omega).
///
/// The coupling signal lambda(t) is piecewise constant: g on [0, t_off], zero
/// afterwards. t_off defaults to "never switched off".
struct ModelParams {
  double coupling = 1.0;
  double omega = 1.0;
  double t_off = std::numeric_limits<double>::infinity();

  void validate() const;
};

/// Real symmetric tridiagonal matrix. `scale` is the natural energy unit of
/// the operator (largest entry magnitude), used for relative tolerances.
struct TridiagonalOperator {
  Eigen::VectorXd diagonal;
  Eigen::VectorXd offdiagonal;
  double scale = 1.0;

  Eigen::Index dimension() const { return diagonal.size(); }

  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const;
  Eigen::MatrixXd dense() const;
};

/// Exact RWA Hamiltonian omega (a^dag a + S_z) + g (S_+ a + S_- a^dag) on a sector.
///
/// The k <-> k+1 element is g sqrt((n-k)(N-k)(k+1)). The diagonal is the
/// constant omega (n - N/2).
TridiagonalOperator exact_tc_matrix(const SectorBasis& basis, const ModelParams& params);

/// Large-photon-number approximation: zero diagonal, off-diagonals
/// g sqrt(n) b_k with b_k = sqrt(N-k+1) sqrt(k), k = 1..N. The dropped term is
/// (n - N/2) times the identity and only contributes a global phase.
TridiagonalOperator large_n_matrix(std::int64_t spins, const ModelParams& params, std::int64_t photons);

/// b_k = sqrt((N-k+1) k) for k in 1..N.
double ladder_weight(std::int64_t spins, std::int64_t k);

/// The non-interacting part omega (a^dag a + S_z) restricted to the sector.
Eigen::VectorXd rest_diagonal(const SectorBasis& basis, const ModelParams& params);

/// Checks [coupling, omega (a^dag a + S_z)] = 0 on the sector; the threshold is
/// 1e-10 times the operator scale.
bool coupling_commutes_with_rest(const SectorBasis& basis, const ModelParams& params);

}  // namespace dicke
