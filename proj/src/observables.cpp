#include "dicke/observables.hpp"

#include "dicke/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace dicke {

namespace {

void require_same_basis(const SectorState& a, const SectorState& b) {
  if (!(a.basis == b.basis) || a.amplitudes.size() != b.amplitudes.size()) {
    throw DimensionMismatch("states live on different sectors");
  }
}

void require_dimension(const SectorState& state, const TridiagonalOperator& op) {
  if (state.amplitudes.size() != op.dimension()) {
    throw DimensionMismatch("operator dimension does not match state");
  }
}

}  // namespace

double stored_energy(const SectorState& state, double omega_a) {
  double excitations = 0.0;
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
    excitations += state.population(k) * static_cast<double>(k);
  }
  return omega_a * excitations;
}

double average_power(double energy, double duration) {
  if (!(duration > 0.0)) throw InvalidArgument("charging time must be positive");
  return energy / duration;
}

double flip_fidelity(const SectorState& state, const SectorState& target) {
  require_same_basis(state, target);
  return std::norm(target.amplitudes.dot(state.amplitudes));
}

double up_probability(const SectorState& state) {
  return stored_energy(state, 1.0) / static_cast<double>(state.basis.spins());
}

SingleSpinDensity single_spin_density(const SectorState& state) {
  const double p = up_probability(state);
  SingleSpinDensity rho;
  rho.matrix << 1.0 - p, 0.0, 0.0, p;
  return rho;
}

double von_neumann_entropy(const SingleSpinDensity& rho) {
  const std::complex<double> a = rho.matrix(0, 0);
  const std::complex<double> d = rho.matrix(1, 1);
  const double trace = a.real() + d.real();
  const double gap = std::hypot(a.real() - d.real(), 2.0 * std::abs(rho.matrix(0, 1)));
  double s = 0.0;
  for (const double lambda : {0.5 * (trace + gap), 0.5 * (trace - gap)}) {
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return std::max(s, 0.0);
}

TwoSpinDensity two_spin_density(const SectorState& state) {
  const std::int64_t spins = state.basis.spins();
  if (spins < 2) throw InvalidArgument("two-spin density needs N >= 2");
  const double pairs = static_cast<double>(spins) * static_cast<double>(spins - 1);
  double uu = 0.0, dd = 0.0, ud = 0.0;
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
    const double w = state.population(k);
    const double up = static_cast<double>(k);
    const double down = static_cast<double>(spins - k);
    uu += w * up * (up - 1.0);
    dd += w * down * (down - 1.0);
    ud += w * up * down;
  }
  TwoSpinDensity rho;
  rho.matrix.setZero();
  rho.matrix(0, 0) = dd / pairs;
  rho.matrix(1, 1) = ud / pairs;
  rho.matrix(2, 2) = ud / pairs;
  rho.matrix(3, 3) = uu / pairs;
  rho.matrix(1, 2) = ud / pairs;
  rho.matrix(2, 1) = ud / pairs;
  return rho;
}

SingleSpinDensity trace_out_second(const TwoSpinDensity& rho) {
  SingleSpinDensity out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out.matrix(a, b) = rho.matrix(2 * a, 2 * b) + rho.matrix(2 * a + 1, 2 * b + 1);
    }
  }
  return out;
}

SingleSpinDensity trace_out_first(const TwoSpinDensity& rho) {
  SingleSpinDensity out;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out.matrix(a, b) = rho.matrix(a, b) + rho.matrix(2 + a, 2 + b);
    }
  }
  return out;
}

double pairwise_concurrence(const TwoSpinDensity& rho) {
  using Real = long double;
  using Complex = std::complex<Real>;
  using Matrix4 = Eigen::Matrix<Complex, 4, 4>;

  Matrix4 r = rho.matrix.cast<Complex>();
  r = (0.5L * (r + r.adjoint())).eval();
  const Eigen::SelfAdjointEigenSolver<Matrix4> eig(r);

  Matrix4 v;
  for (int j = 0; j < 4; ++j) {
    const Real mu = std::max(eig.eigenvalues()[j], Real{0});
    v.col(j) = std::sqrt(mu) * eig.eigenvectors().col(j);
  }
  // sigma_y (x) sigma_y in the (dd, du, ud, uu) basis.
  Matrix4 flip = Matrix4::Zero();
  flip(0, 3) = -1;
  flip(3, 0) = -1;
  flip(1, 2) = 1;
  flip(2, 1) = 1;

  const Matrix4 tau = v.transpose() * flip * v;
  const Eigen::JacobiSVD<Matrix4> svd(tau);
  const auto& s = svd.singularValues();
  const Real c = s[0] - s[1] - s[2] - s[3];
  return static_cast<double>(std::max(c, Real{0}));
}

double cos_theta(const SectorState& state) {
  return 2.0 * up_probability(state) - 1.0;
}

double excitation_number(const SectorState& state) {
  const SectorBasis& basis = state.basis;
  double sum = 0.0;
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
    sum += state.population(k) * (static_cast<double>(basis.photons_at(k)) + basis.spin_projection(k));
  }
  return sum;
}

double energy_expectation(const SectorState& state, const TridiagonalOperator& op) {
  require_dimension(state, op);
  return state.amplitudes.dot(op.apply(state.amplitudes)).real();
}

double energy_variance(const SectorState& state, const TridiagonalOperator& op) {
  require_dimension(state, op);
  const Eigen::VectorXcd applied = op.apply(state.amplitudes);
  const double mean = state.amplitudes.dot(applied).real();
  const double second = applied.squaredNorm();
  return std::sqrt(std::max(second - mean * mean, 0.0));
}

}  // namespace dicke
