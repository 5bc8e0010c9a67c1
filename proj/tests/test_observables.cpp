#include <doctest.h>

#include "dicke/dynamics.hpp"
#include "dicke/errors.hpp"
#include "dicke/observables.hpp"
#include "dicke/oracle.hpp"

#include <cmath>
#include <numbers>

using namespace dicke;

namespace {

SectorState with_amplitudes(std::int64_t spins, std::int64_t photons, std::vector<std::complex<double>> amps) {
  SectorState s = initial_state(build_sector(spins, photons));
  for (std::size_t i = 0; i < amps.size(); ++i) s.amplitudes[static_cast<Eigen::Index>(i)] = amps[i];
  return s;
}

}  // namespace

TEST_CASE("stored energy") {
  CHECK(stored_energy(initial_state(build_sector(3, 10)), 1.0) == 0.0);
  CHECK(stored_energy(target_state(build_sector(3, 10)), 1.0) == doctest::Approx(3.0));
  const double a = 1.0 / std::sqrt(3.0);
  CHECK(stored_energy(with_amplitudes(2, 5, {a, a, a}), 2.0) == doctest::Approx(2.0));
}

TEST_CASE("average power") {
  CHECK(average_power(3.0, 1.5) == doctest::Approx(2.0));
  CHECK(average_power(0.0, 1.0) == 0.0);
  const double spins = 5, photons = 40, g = 0.3, omega = 1.2;
  const double tau = std::numbers::pi / (2.0 * g * std::sqrt(spins * photons));
  CHECK(average_power(spins * omega, tau) ==
        doctest::Approx(2.0 * spins * omega * g * std::sqrt(spins * photons) / std::numbers::pi).epsilon(1e-14));
  CHECK_THROWS_AS(average_power(1.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(average_power(1.0, -2.0), InvalidArgument);
}

TEST_CASE("flip fidelity") {
  const SectorBasis b = build_sector(4, 9);
  CHECK(flip_fidelity(target_state(b), target_state(b)) == 1.0);
  CHECK(flip_fidelity(initial_state(b), target_state(b)) == 0.0);
  CHECK_THROWS_AS(flip_fidelity(initial_state(b), target_state(build_sector(4, 10))), DimensionMismatch);

  const ModelParams params{};
  const ChargingPropagator prop(build_sector(2, 9), Model::large_n, params);
  const double tau = std::numbers::pi / (2.0 * std::sqrt(9.0));
  CHECK(flip_fidelity(prop.state_at(tau), target_state(build_sector(2, 9))) > 1.0 - 1e-10);
}

TEST_CASE("single-spin density") {
  const SectorBasis b = build_sector(3, 7);
  const Eigen::Matrix2cd down = single_spin_density(initial_state(b)).matrix;
  CHECK(down(0, 0).real() == 1.0);
  CHECK(down(1, 1).real() == 0.0);
  const Eigen::Matrix2cd up = single_spin_density(target_state(b)).matrix;
  CHECK(up(0, 0).real() == 0.0);
  CHECK(up(1, 1).real() == 1.0);

  const double r = 1.0 / std::sqrt(2.0);
  const Eigen::Matrix2cd half = single_spin_density(with_amplitudes(2, 5, {r, 0.0, r})).matrix;
  CHECK(half(0, 0).real() == doctest::Approx(0.5));
  CHECK(half(1, 1).real() == doctest::Approx(0.5));
  CHECK(std::abs(half(0, 1)) == 0.0);
}

TEST_CASE("von Neumann entropy in nats") {
  SingleSpinDensity pure{Eigen::Matrix2cd::Zero()};
  pure.matrix(0, 0) = 1.0;
  CHECK(von_neumann_entropy(pure) == 0.0);
  SingleSpinDensity mixed{Eigen::Matrix2cd::Identity() * 0.5};
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_neumann_entropy(mixed) == doctest::Approx(0.693147).epsilon(1e-6));

  // A coherent single-spin state is pure even with off-diagonal entries.
  SingleSpinDensity coherent{Eigen::Matrix2cd::Constant(0.5)};
  CHECK(std::abs(von_neumann_entropy(coherent)) < 1e-12);
  CHECK(von_neumann_entropy(coherent) == doctest::Approx(oracle::entropy(coherent)).epsilon(1e-12));
}

TEST_CASE("mid-flip entropy is reported, not suppressed") {
  const ModelParams params{};
  const ChargingPropagator prop(build_sector(10, 10'000), Model::exact, params);
  const double tau = std::numbers::pi / 200.0;
  const double s = von_neumann_entropy(single_spin_density(prop.state_at(0.5 * tau)));
  // Half-way through the flip every spin is close to p = 1/2.
  CHECK(s > 0.69);
  CHECK(s <= std::log(2.0) + 1e-15);
}

TEST_CASE("two-spin density") {
  const Eigen::Matrix4cd up = two_spin_density(target_state(build_sector(3, 9))).matrix;
  CHECK(up(3, 3).real() == doctest::Approx(1.0));
  CHECK(up.cwiseAbs().sum() == doctest::Approx(1.0));

  const Eigen::Matrix4cd d1 = two_spin_density(with_amplitudes(2, 5, {0.0, 1.0, 0.0})).matrix;
  CHECK(d1(1, 1).real() == doctest::Approx(0.5));
  CHECK(d1(2, 2).real() == doctest::Approx(0.5));
  CHECK(d1(1, 2).real() == doctest::Approx(0.5));
  CHECK(d1(2, 1).real() == doctest::Approx(0.5));
  CHECK(std::abs(d1(0, 0)) == 0.0);

  const Eigen::Matrix4cd down = two_spin_density(initial_state(build_sector(4, 9))).matrix;
  CHECK(down(0, 0).real() == doctest::Approx(1.0));
  CHECK(down.cwiseAbs().sum() == doctest::Approx(1.0));

  CHECK_THROWS_AS(two_spin_density(initial_state(build_sector(1, 3))), InvalidArgument);
}

TEST_CASE("two-spin marginals reproduce the single-spin density") {
  const ChargingPropagator prop(build_sector(6, 11), Model::exact, ModelParams{0.8, 1.0});
  for (double t : {0.0, 0.05, 0.2, 0.41, 1.3}) {
    const SectorState s = prop.state_at(t);
    const TwoSpinDensity rho2 = two_spin_density(s);
    const Eigen::Matrix2cd rho1 = single_spin_density(s).matrix;
    CHECK((trace_out_second(rho2).matrix - rho1).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((trace_out_first(rho2).matrix - rho1).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(std::abs(rho2.matrix.trace() - 1.0) < 1e-14);
    CHECK((rho2.matrix - rho2.matrix.adjoint()).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("pairwise concurrence") {
  TwoSpinDensity product{Eigen::Matrix4cd::Zero()};
  product.matrix(0, 0) = 1.0;
  CHECK(pairwise_concurrence(product) == 0.0);

  const TwoSpinDensity d1 = two_spin_density(with_amplitudes(2, 5, {0.0, 1.0, 0.0}));
  CHECK(pairwise_concurrence(d1) == doctest::Approx(1.0).epsilon(1e-12));

  TwoSpinDensity mixed{Eigen::Matrix4cd::Identity() * 0.25};
  CHECK(pairwise_concurrence(mixed) == 0.0);

  // Bell state (|dd> + |uu>)/sqrt 2 lies outside the symmetric-sector family but is a standard check.
  TwoSpinDensity bell{Eigen::Matrix4cd::Zero()};
  bell.matrix(0, 0) = bell.matrix(3, 3) = bell.matrix(0, 3) = bell.matrix(3, 0) = 0.5;
  CHECK(pairwise_concurrence(bell) == doctest::Approx(1.0).epsilon(1e-12));
  // Werner state p |bell><bell| + (1-p) I/4 has C = max(0, (3p - 1)/2).
  for (double p : {0.2, 0.5, 0.8}) {
    TwoSpinDensity werner{p * bell.matrix + (1.0 - p) * 0.25 * Eigen::Matrix4cd::Identity()};
    CHECK(pairwise_concurrence(werner) == doctest::Approx(std::max(0.0, 1.5 * p - 0.5)).epsilon(1e-12));
  }
}

TEST_CASE("pairwise concurrence matches the X-state closed form along trajectories") {
  for (std::int64_t photons : {3, 12, 40}) {
    const ChargingPropagator prop(build_sector(5, photons), Model::exact, ModelParams{});
    for (int i = 0; i <= 40; ++i) {
      const double t = 0.03 * i;
      const TwoSpinDensity rho = two_spin_density(prop.state_at(t));
      CHECK(std::abs(pairwise_concurrence(rho) - oracle::x_state_concurrence(rho)) < 1e-10);
    }
  }
}

TEST_CASE("mid-flip concurrence is small for many photons") {
  const ChargingPropagator prop(build_sector(10, 10'000), Model::exact, ModelParams{});
  const double tau = std::numbers::pi / 200.0;
  CHECK(pairwise_concurrence(two_spin_density(prop.state_at(0.5 * tau))) < 0.01);
}

TEST_CASE("cos theta") {
  CHECK(cos_theta(initial_state(build_sector(4, 6))) == -1.0);
  CHECK(cos_theta(target_state(build_sector(4, 6))) == 1.0);
  const double photons = 25.0;
  const ChargingPropagator prop(build_sector(1, 25), Model::exact, ModelParams{});
  CHECK(std::abs(cos_theta(prop.state_at(std::numbers::pi / (4.0 * std::sqrt(photons))))) < 1e-10);
}

TEST_CASE("excitation number and energy") {
  const SectorBasis b = build_sector(3, 20);
  CHECK(excitation_number(initial_state(b)) == doctest::Approx(18.5));
  CHECK(excitation_number(target_state(b)) == doctest::Approx(18.5));
  const TridiagonalOperator h = exact_tc_matrix(b, ModelParams{});
  CHECK(energy_expectation(initial_state(b), h) == doctest::Approx(18.5));
}

TEST_CASE("energy spread") {
  const ModelParams params{};
  const TridiagonalOperator h = large_n_matrix(4, params, 100);
  const EigenSystem eig = eigendecompose(h);
  SectorState eigenstate = initial_state(build_sector(4, 100));
  eigenstate.amplitudes = eig.eigenvectors.col(2).cast<std::complex<double>>();
  CHECK(energy_variance(eigenstate, h) < 1e-5);

  for (std::int64_t spins : {1, 2, 4, 9}) {
    for (std::int64_t photons : {spins, 4 * spins, 100 * spins}) {
      const double g = 0.7;
      const TridiagonalOperator op = large_n_matrix(spins, ModelParams{g, 1.0}, photons);
      const double expected = g * std::sqrt(static_cast<double>(photons * spins));
      CHECK(energy_variance(initial_state(build_sector(spins, photons)), op) ==
            doctest::Approx(expected).epsilon(1e-13));
    }
  }
  CHECK(energy_variance(initial_state(build_sector(1, 4)), large_n_matrix(1, params, 4)) == doctest::Approx(2.0));
}
