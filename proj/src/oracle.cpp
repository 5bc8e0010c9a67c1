#include "dicke/oracle.hpp"

#include "dicke/errors.hpp"

#include <Eigen/Eigenvalues>

#include <bit>
#include <cmath>
#include <string>

namespace dicke::oracle {

namespace {

void check_limits(std::int64_t spins, std::int64_t n_max) {
  if (spins < 1 || spins > kMaxSpins) throw InvalidArgument("brute force supports 1 <= N <= 4");
  if (n_max < 1 || n_max > kMaxFockLevel) throw InvalidArgument("brute force supports Fock truncation <= 64");
}

Eigen::Index index_of(std::int64_t spin_bits, std::int64_t photons, std::int64_t n_max) {
  return static_cast<Eigen::Index>(spin_bits * (n_max + 1) + photons);
}

double binomial_double(std::int64_t n, std::int64_t k) {
  double c = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

}  // namespace

double FullState::fock_tail_population() const {
  double tail = 0.0;
  for (std::int64_t s = 0; s < (std::int64_t{1} << spins); ++s) {
    tail += std::norm(amplitudes[index_of(s, n_max, n_max)]);
  }
  return tail;
}

Eigen::MatrixXd brute_force_hamiltonian(std::int64_t spins, std::int64_t n_max, const ModelParams& params,
                                        bool rwa) {
  check_limits(spins, n_max);
  const std::int64_t configs = std::int64_t{1} << spins;
  const Eigen::Index dim = static_cast<Eigen::Index>(configs * (n_max + 1));
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  const double g = params.coupling;
  const double w = params.omega;

  for (std::int64_t s = 0; s < configs; ++s) {
    const double sz = static_cast<double>(std::popcount(static_cast<std::uint64_t>(s))) - 0.5 * static_cast<double>(spins);
    for (std::int64_t m = 0; m <= n_max; ++m) {
      const Eigen::Index col = index_of(s, m, n_max);
      h(col, col) = w * static_cast<double>(m) + w * sz;
      for (std::int64_t j = 0; j < spins; ++j) {
        const std::int64_t bit = std::int64_t{1} << j;
        if (s & bit) continue;
        const std::int64_t raised = s | bit;  // sigma_+^{(j)}
        // S_+ a: |s, m> -> sqrt(m) |s + j, m - 1>
        if (m >= 1) {
          const Eigen::Index row = index_of(raised, m - 1, n_max);
          h(row, col) += g * std::sqrt(static_cast<double>(m));
          h(col, row) += g * std::sqrt(static_cast<double>(m));
        }
        // Counter-rotating S_+ a^dag: |s, m> -> sqrt(m+1) |s + j, m + 1>
        if (!rwa && m + 1 <= n_max) {
          const Eigen::Index row = index_of(raised, m + 1, n_max);
          h(row, col) += g * std::sqrt(static_cast<double>(m + 1));
          h(col, row) += g * std::sqrt(static_cast<double>(m + 1));
        }
      }
    }
  }
  return h;
}

Eigen::VectorXd excitation_diagonal(std::int64_t spins, std::int64_t n_max) {
  check_limits(spins, n_max);
  const std::int64_t configs = std::int64_t{1} << spins;
  Eigen::VectorXd d(configs * (n_max + 1));
  for (std::int64_t s = 0; s < configs; ++s) {
    const double sz = static_cast<double>(std::popcount(static_cast<std::uint64_t>(s))) - 0.5 * static_cast<double>(spins);
    for (std::int64_t m = 0; m <= n_max; ++m) d[index_of(s, m, n_max)] = static_cast<double>(m) + sz;
  }
  return d;
}

double excitation_commutator_norm(const Eigen::MatrixXd& hamiltonian, std::int64_t spins, std::int64_t n_max) {
  const Eigen::VectorXd x = excitation_diagonal(spins, n_max);
  if (x.size() != hamiltonian.rows()) throw DimensionMismatch("Hamiltonian does not match full space");
  const Eigen::MatrixXd commutator = hamiltonian * x.asDiagonal() - x.asDiagonal() * hamiltonian;
  return commutator.cwiseAbs().maxCoeff();
}

FullState product_initial_state(std::int64_t spins, std::int64_t photons, std::int64_t n_max) {
  check_limits(spins, n_max);
  if (photons < 0 || photons > n_max) throw InvalidArgument("photon number beyond truncation");
  FullState state{spins, n_max, Eigen::VectorXcd::Zero((std::int64_t{1} << spins) * (n_max + 1))};
  state.amplitudes[index_of(0, photons, n_max)] = 1.0;
  return state;
}

BruteForcePropagator::BruteForcePropagator(std::int64_t spins, std::int64_t photons, const ModelParams& params)
    : spins_(spins), photons_(photons), n_max_(photons + spins + 2) {
  params.validate();
  const Eigen::MatrixXd h = brute_force_hamiltonian(spins, n_max_, params, true);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw NonConvergence("dense eigensolver failed");
  energies_ = solver.eigenvalues();
  vectors_ = solver.eigenvectors();
  initial_overlap_ = vectors_.row(index_of(0, photons, n_max_)).transpose();
}

FullState BruteForcePropagator::state_at(double t) const {
  Eigen::VectorXcd phased(energies_.size());
  for (Eigen::Index j = 0; j < energies_.size(); ++j) {
    phased[j] = initial_overlap_[j] * std::polar(1.0, -energies_[j] * t);
  }
  FullState state{spins_, n_max_, vectors_.cast<std::complex<double>>() * phased};
  const double tail = state.fock_tail_population();
  if (tail > 1e-12) {
    throw TruncationLeakage("Fock truncation leaked population " + std::to_string(tail));
  }
  return state;
}

FullState brute_force_evolve(std::int64_t spins, std::int64_t photons, const ModelParams& params, double t) {
  return BruteForcePropagator(spins, photons, params).state_at(t);
}

Eigen::VectorXcd sector_amplitudes(const FullState& state, std::int64_t photons) {
  const std::int64_t k_max = std::min(state.spins, photons);
  Eigen::VectorXcd out = Eigen::VectorXcd::Zero(k_max + 1);
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const double weight = 1.0 / std::sqrt(binomial_double(state.spins, k));
    for (std::int64_t s = 0; s < (std::int64_t{1} << state.spins); ++s) {
      if (std::popcount(static_cast<std::uint64_t>(s)) != k) continue;
      out[k] += weight * state.amplitudes[index_of(s, photons - k, state.n_max)];
    }
  }
  return out;
}

FullState embed(const SectorState& sector, std::int64_t n_max) {
  const std::int64_t spins = sector.basis.spins();
  check_limits(spins, n_max);
  if (sector.basis.photons() > n_max) throw InvalidArgument("photon number beyond truncation");
  FullState state{spins, n_max, Eigen::VectorXcd::Zero((std::int64_t{1} << spins) * (n_max + 1))};
  for (std::int64_t k = 0; k <= sector.basis.max_index(); ++k) {
    const double weight = 1.0 / std::sqrt(binomial_double(spins, k));
    for (std::int64_t s = 0; s < (std::int64_t{1} << spins); ++s) {
      if (std::popcount(static_cast<std::uint64_t>(s)) != k) continue;
      state.amplitudes[index_of(s, sector.basis.photons_at(k), n_max)] = weight * sector.amplitudes[k];
    }
  }
  return state;
}

Eigen::MatrixXcd reduced_spin_density(const FullState& state, const std::vector<int>& keep) {
  const int kept = static_cast<int>(keep.size());
  for (const int j : keep) {
    if (j < 0 || j >= state.spins) throw InvalidArgument("spin index out of range");
  }
  const Eigen::Index dim = Eigen::Index{1} << kept;
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  std::int64_t keep_mask = 0;
  for (const int j : keep) keep_mask |= std::int64_t{1} << j;

  auto local_index = [&](std::int64_t s) {
    Eigen::Index idx = 0;
    for (int i = 0; i < kept; ++i) idx = (idx << 1) | ((s >> keep[i]) & 1);
    return idx;
  };

  const std::int64_t configs = std::int64_t{1} << state.spins;
  // rho_{ab} = sum over environment (other spins, photons) of psi(a, env) psi*(b, env)
  for (std::int64_t s1 = 0; s1 < configs; ++s1) {
    for (std::int64_t s2 = 0; s2 < configs; ++s2) {
      if ((s1 & ~keep_mask) != (s2 & ~keep_mask)) continue;
      std::complex<double> acc = 0.0;
      for (std::int64_t m = 0; m <= state.n_max; ++m) {
        acc += state.amplitudes[index_of(s1, m, state.n_max)] * std::conj(state.amplitudes[index_of(s2, m, state.n_max)]);
      }
      rho(local_index(s1), local_index(s2)) += acc;
    }
  }
  return rho;
}

SingleSpinDensity single_spin_density(const FullState& state, int spin) {
  return SingleSpinDensity{reduced_spin_density(state, {spin})};
}

TwoSpinDensity two_spin_density(const FullState& state, int first, int second) {
  return TwoSpinDensity{reduced_spin_density(state, {first, second})};
}

double entropy(const SingleSpinDensity& rho) {
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho.matrix);
  double s = 0.0;
  for (Eigen::Index i = 0; i < 2; ++i) {
    const double lambda = solver.eigenvalues()[i];
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s;
}

double x_state_concurrence(const TwoSpinDensity& rho) {
  const Eigen::Matrix4cd& r = rho.matrix;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const bool on_x = i == j || i + j == 3;
      if (!on_x && std::abs(r(i, j)) > 1e-12) throw InvalidArgument("two-spin state is not X-shaped");
    }
  }
  const double dd = r(0, 0).real(), du = r(1, 1).real(), ud = r(2, 2).real(), uu = r(3, 3).real();
  const double a = std::abs(r(1, 2)) - std::sqrt(std::max(dd * uu, 0.0));
  const double b = std::abs(r(0, 3)) - std::sqrt(std::max(du * ud, 0.0));
  return 2.0 * std::max({0.0, a, b});
}

}  // namespace dicke::oracle
