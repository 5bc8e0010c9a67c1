#pragma once

// Brute-force reference simulator on the full 2^N (x) Fock space.
//
// Nothing here reuses the sector machinery: the Hamiltonian is assembled from
// single-spin ladder operators and a truncated boson, diagonalized densely with
// Eigen, and reduced states come from explicit partial traces. It is meant for
// N <= 4 and exists to cross-check the sector code.

#include "dicke/hilbert.hpp"
#include "dicke/observables.hpp"
#include "dicke/operators.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace dicke::oracle {

inline constexpr std::int64_t kMaxSpins = 4;
inline constexpr std::int64_t kMaxFockLevel = 64;

/// Full-space amplitudes, index = spin_bits * (n_max + 1) + photons, bit j of
/// spin_bits set when spin j is up.
struct FullState {
  std::int64_t spins = 0;
  std::int64_t n_max = 0;
  Eigen::VectorXcd amplitudes;

  std::int64_t fock_levels() const { return n_max + 1; }
  double fock_tail_population() const;
};

/// omega a^dag a + omega S_z + g (S_+ a + S_- a^dag), or with rwa = false the
/// Dicke form g (a + a^dag)(S_+ + S_-). Dense, real symmetric.
Eigen::MatrixXd brute_force_hamiltonian(std::int64_t spins, std::int64_t n_max, const ModelParams& params,
                                        bool rwa);

/// Diagonal of a^dag a + S_z.
Eigen::VectorXd excitation_diagonal(std::int64_t spins, std::int64_t n_max);

/// max |[H, a^dag a + S_z]|.
double excitation_commutator_norm(const Eigen::MatrixXd& hamiltonian, std::int64_t spins, std::int64_t n_max);

/// |down...down> (x) |n>.
FullState product_initial_state(std::int64_t spins, std::int64_t photons, std::int64_t n_max);

/// RWA propagator for |down..down>|n> with truncation n_max = n + N + 2.
class BruteForcePropagator {
 public:
  BruteForcePropagator(std::int64_t spins, std::int64_t photons, const ModelParams& params);

  /// Throws TruncationLeakage when the top Fock level holds more than 1e-12.
  FullState state_at(double t) const;

  std::int64_t n_max() const { return n_max_; }

 private:
  std::int64_t spins_;
  std::int64_t photons_;
  std::int64_t n_max_;
  Eigen::VectorXd energies_;
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd initial_overlap_;
};

FullState brute_force_evolve(std::int64_t spins, std::int64_t photons, const ModelParams& params, double t);

/// <D_k^N, n-k | psi> for k = 0..min(N, n); D_k^N the symmetric k-up state.
Eigen::VectorXcd sector_amplitudes(const FullState& state, std::int64_t photons);

/// Maps sector amplitudes onto symmetric Dicke (x) Fock states.
FullState embed(const SectorState& state, std::int64_t n_max);

/// Density matrix of the listed spins with photons and all other spins traced
/// out. The first listed spin is the most significant bit of the row index.
Eigen::MatrixXcd reduced_spin_density(const FullState& state, const std::vector<int>& keep);

SingleSpinDensity single_spin_density(const FullState& state, int spin);
TwoSpinDensity two_spin_density(const FullState& state, int first, int second);

/// Entropy from a dense Hermitian eigensolve.
double entropy(const SingleSpinDensity& rho);

/// Closed-form concurrence of an X-shaped two-qubit state,
/// 2 max(0, |rho_{du,ud}| - sqrt(rho_dd rho_uu), |rho_{dd,uu}| - sqrt(rho_du rho_ud)).
/// Throws InvalidArgument if entries outside the X exceed 1e-12.
double x_state_concurrence(const TwoSpinDensity& rho);

}  // namespace dicke::oracle
