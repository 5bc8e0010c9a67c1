#pragma once

#include "dicke/hilbert.hpp"
#include "dicke/operators.hpp"

#include <Eigen/Dense>

namespace dicke {

/// Reduced state of one spin, basis order (|down>, |up>).
struct SingleSpinDensity {
  Eigen::Matrix2cd matrix;
};

/// Reduced state of two spins, basis order (|dd>, |du>, |ud>, |uu>) with the
/// first letter for the first spin.
struct TwoSpinDensity {
  Eigen::Matrix4cd matrix;
};

/// W = omega_a sum_k |c_k|^2 k: energy moved into the spins since t = 0.
double stored_energy(const SectorState& state, double omega_a);

/// W / tau; throws for tau <= 0.
double average_power(double energy, double duration);

/// |<target|state>|^2.
double flip_fidelity(const SectorState& state, const SectorState& target);

/// Fraction of spins flipped up, sum_k |c_k|^2 k / N.
double up_probability(const SectorState& state);

/// Tracing out the photons removes every coherence between different k, so the
/// one-spin marginal is diag(1 - p, p).
SingleSpinDensity single_spin_density(const SectorState& state);

/// Natural-log entropy -sum lambda ln lambda, with 0 ln 0 = 0.
double von_neumann_entropy(const SingleSpinDensity& rho);

/// Two-spin marginal of the photon-traced Dicke mixture. Needs N >= 2.
TwoSpinDensity two_spin_density(const SectorState& state);

/// Partial trace over the second spin.
SingleSpinDensity trace_out_second(const TwoSpinDensity& rho);

/// Partial trace over the first spin.
SingleSpinDensity trace_out_first(const TwoSpinDensity& rho);

/// Wootters concurrence max(0, l1 - l2 - l3 - l4), where l_i are the square
/// roots of the eigenvalues of rho (sy x sy) rho* (sy x sy), descending.
///
/// The l_i are obtained as singular values of tau = V^T (sy x sy) V with
/// rho = V V^dag, evaluated in extended precision: concurrence has square-root
/// sensitivity at rank-deficient states, and double rounding would show up at
/// the 1e-8 level.
double pairwise_concurrence(const TwoSpinDensity& rho);

/// <sigma_z> of any single spin, 2p - 1; all spins are equivalent.
double cos_theta(const SectorState& state);

/// <a^dag a + S_z>.
double excitation_number(const SectorState& state);

/// Re <psi|T|psi>.
double energy_expectation(const SectorState& state, const TridiagonalOperator& op);

/// sqrt(<T^2> - <T>^2).
double energy_variance(const SectorState& state, const TridiagonalOperator& op);

}  // namespace dicke
