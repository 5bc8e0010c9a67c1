#include <doctest.h>

#include "dicke/errors.hpp"
#include "dicke/oracle.hpp"
#include "dicke/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace dicke;

namespace {

TridiagonalOperator from_entries(std::vector<double> d, std::vector<double> e) {
  TridiagonalOperator op;
  op.diagonal = Eigen::Map<Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size()));
  op.offdiagonal = Eigen::Map<Eigen::VectorXd>(e.data(), static_cast<Eigen::Index>(e.size()));
  return op;
}

BigInt factorial(std::int64_t k) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("eigendecompose on small matrices") {
  const EigenSystem two = eigendecompose(from_entries({0.0, 0.0}, {1.0}));
  CHECK(two.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(two.eigenvalues[1] == doctest::Approx(1.0));

  const EigenSystem three = eigendecompose(large_n_matrix(2, ModelParams{}, 1));
  CHECK(std::abs(three.eigenvalues[0] + 2.0) < 1e-14);
  CHECK(std::abs(three.eigenvalues[1]) < 1e-14);
  CHECK(std::abs(three.eigenvalues[2] - 2.0) < 1e-14);

  const EigenSystem one = eigendecompose(from_entries({3.5}, {}));
  CHECK(one.eigenvalues[0] == 3.5);
  CHECK(one.eigenvectors(0, 0) == 1.0);
}

TEST_CASE("eigendecompose agrees with brute-force dense diagonalization") {
  const ModelParams params{};
  const SectorBasis basis = build_sector(2, 10);
  const EigenSystem eig = eigendecompose(exact_tc_matrix(basis, params));

  // Restrict the full-space Hamiltonian to the excitation sector of |dd>|10>.
  const std::int64_t n_max = 14;
  const Eigen::MatrixXd full = oracle::brute_force_hamiltonian(2, n_max, params, true);
  const Eigen::VectorXd excitation = oracle::excitation_diagonal(2, n_max);
  std::vector<Eigen::Index> sector;
  for (Eigen::Index i = 0; i < excitation.size(); ++i) {
    if (std::abs(excitation[i] - basis.excitation_number()) < 1e-12) sector.push_back(i);
  }
  Eigen::MatrixXd block(sector.size(), sector.size());
  for (std::size_t a = 0; a < sector.size(); ++a)
    for (std::size_t b = 0; b < sector.size(); ++b) block(a, b) = full(sector[a], sector[b]);
  const Eigen::VectorXd dense = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(block).eigenvalues();

  // The dense block also contains the singlet, which the symmetric sector leaves out.
  for (Eigen::Index j = 0; j < eig.dimension(); ++j) {
    CHECK((dense.array() - eig.eigenvalues[j]).abs().minCoeff() < 1e-10);
  }
}

TEST_CASE("eigendecompose returns sorted orthonormal eigenpairs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    const int size = 1 + trial * 3;
    std::vector<double> d(size), e(size - 1);
    for (double& x : d) x = dist(rng);
    for (double& x : e) x = dist(rng);
    const TridiagonalOperator op = from_entries(d, e);
    const EigenSystem eig = eigendecompose(op);
    for (Eigen::Index j = 1; j < eig.dimension(); ++j) CHECK(eig.eigenvalues[j - 1] <= eig.eigenvalues[j]);
    CHECK(orthonormality_residual(eig.eigenvectors) < 1e-12);
    CHECK(eigen_residual(op, eig) < 1e-11);
    const Eigen::VectorXd reference = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(op.dense()).eigenvalues();
    CHECK((reference - eig.eigenvalues).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("eigendecompose is deterministic and sign-fixed") {
  const TridiagonalOperator op = exact_tc_matrix(build_sector(7, 30), ModelParams{});
  const EigenSystem a = eigendecompose(op);
  const EigenSystem b = eigendecompose(op);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
  for (Eigen::Index j = 0; j < a.dimension(); ++j) {
    Eigen::Index first = 0;
    while (std::abs(a.eigenvectors(first, j)) <= 1e-8) ++first;
    CHECK(a.eigenvectors(first, j) > 0.0);
  }
}

TEST_CASE("eigendecompose rejects non-finite input") {
  CHECK_THROWS_AS(eigendecompose(from_entries({0.0, std::nan("")}, {1.0})), InvalidArgument);
}

TEST_CASE("analytic eigenvalues") {
  const Eigen::VectorXd three = analytic_eigenvalues(3, 1.0, 1);
  REQUIRE(three.size() == 4);
  CHECK(three[0] == 3.0);
  CHECK(three[1] == 1.0);
  CHECK(three[2] == -1.0);
  CHECK(three[3] == -3.0);

  const Eigen::VectorXd one = analytic_eigenvalues(1, 2.0, 4);
  CHECK(one[0] == 4.0);
  CHECK(one[1] == -4.0);
}

TEST_CASE("analytic eigenvalues match the numerical solver") {
  for (std::int64_t spins = 1; spins <= 60; ++spins) {
    const ModelParams params{};
    const std::int64_t photons = 10'000;
    const EigenSystem numeric = eigendecompose(large_n_matrix(spins, params, photons));
    const EigenSystem analytic = analytic_eigensystem(spins, 1.0, photons);
    const double scale = std::sqrt(static_cast<double>(photons));
    CHECK((numeric.eigenvalues - analytic.eigenvalues).cwiseAbs().maxCoeff() / scale < 1e-10);
  }
}

TEST_CASE("pseudo-Hermite values") {
  CHECK(pseudo_hermite(5, 0, 3) == 1);
  CHECK(pseudo_hermite(3, 1, 1) == 1);
  CHECK(pseudo_hermite(2, 2, 1) == -2);
  CHECK(pseudo_hermite(4, 1, 1) == 2);
}

TEST_CASE("pseudo-Hermite parity P_k(N - xi) = (-1)^k P_k(xi)") {
  for (std::int64_t spins = 1; spins <= 14; ++spins) {
    const PseudoHermiteFamily fam = pseudo_hermite_family(spins);
    for (std::int64_t k = 0; k <= spins; ++k) {
      for (std::int64_t xi = 0; xi <= spins; ++xi) {
        const BigInt sign = (k % 2 == 0) ? 1 : -1;
        CHECK(fam(k, spins - xi) == sign * fam(k, xi));
        CHECK(fam(k, xi) == pseudo_hermite(spins, k, xi));
      }
    }
  }
}

TEST_CASE("pseudo-Hermite recursion factor is b_{k-1}^2") {
  // P_k = (N - 2 xi) P_{k-1} - (k-1)(N-k+2) P_{k-2}, and (k-1)(N-k+2) is the squared
  // large-n ladder weight between k-2 and k-1.
  for (std::int64_t spins = 2; spins <= 12; ++spins) {
    for (std::int64_t k = 2; k <= spins; ++k) {
      const double weight = ladder_weight(spins, k - 1);
      CHECK(weight * weight == doctest::Approx(static_cast<double>((k - 1) * (spins - k + 2))));
      for (std::int64_t xi = 0; xi <= spins; ++xi) {
        const BigInt lhs = pseudo_hermite(spins, k, xi);
        const BigInt rhs = BigInt(spins - 2 * xi) * pseudo_hermite(spins, k - 1, xi) -
                           BigInt((k - 1) * (spins - k + 2)) * pseudo_hermite(spins, k - 2, xi);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("scaled pseudo-Hermite") {
  CHECK(scaled_pseudo_hermite(4, 1, BigRational(1, 2)) == 2);
  CHECK(scaled_pseudo_hermite(3, 0, BigRational(-1)) == 1);
  CHECK(scaled_pseudo_hermite(2, 2, BigRational(0)) == -2);
  for (std::int64_t spins = 1; spins <= 10; ++spins) {
    for (std::int64_t k = 0; k <= spins; ++k) {
      for (std::int64_t xi = 0; xi <= spins; ++xi) {
        const BigRational x(spins - 2 * xi, spins);
        CHECK(scaled_pseudo_hermite(spins, k, x) == BigRational(pseudo_hermite(spins, k, xi)));
      }
    }
  }
  CHECK_THROWS_AS(scaled_pseudo_hermite(3, 1, BigRational(3, 2)), InvalidArgument);
}

TEST_CASE("binomial-weighted orthogonality is exact") {
  for (std::int64_t spins = 1; spins <= 30; ++spins) {
    for (std::int64_t j = 0; j <= spins; ++j) {
      for (std::int64_t k = j; k <= spins; ++k) {
        const BigInt s = weighted_inner_product(spins, j, k);
        if (j != k) {
          CHECK(s == 0);
        } else {
          const BigInt f = factorial(k);
          CHECK(s == (BigInt(1) << spins) * f * f * binomial(spins, k));
        }
      }
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("Hermite-limit recursion and Rodrigues form coincide") {
  CHECK(rodrigues_residual(3, 1) < 1e-12);
  CHECK(rodrigues_residual(5, 0) == 0.0);
  CHECK(rodrigues_residual(4, 2) < 1e-12);
  for (std::int64_t spins = 1; spins <= 10; ++spins)
    for (std::int64_t k = 0; k <= spins; ++k) CHECK(rodrigues_residual(spins, k) < 1e-12);

  // Low orders written out: 1, Nx, N^2 x^2 - N.
  const IntPolynomial p2 = rodrigues_polynomial(3, 2);
  REQUIRE(p2.size() >= 3);
  CHECK(p2[0] == -3);
  CHECK(p2[1] == 0);
  CHECK(p2[2] == 9);
  CHECK(hermite_limit_polynomial(3, 2) == p2);
}

TEST_CASE("analytic eigenvectors") {
  const Eigen::MatrixXd one = analytic_eigenvectors(1);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(one(0, 0) == doctest::Approx(r));
  CHECK(one(1, 0) == doctest::Approx(r));
  CHECK(one(0, 1) == doctest::Approx(r));
  CHECK(one(1, 1) == doctest::Approx(-r));

  const Eigen::MatrixXd two = analytic_eigenvectors(2);
  CHECK(two(0, 1) == doctest::Approx(r));
  CHECK(std::abs(two(1, 1)) < 1e-15);
  CHECK(two(2, 1) == doctest::Approx(-r));
}

TEST_CASE("analytic eigenvectors are orthonormal eigenvectors") {
  for (std::int64_t spins = 1; spins <= 40; ++spins) {
    const Eigen::MatrixXd v = analytic_eigenvectors(spins);
    CHECK(orthonormality_residual(v) < 1e-10);
    const TridiagonalOperator op = large_n_matrix(spins, ModelParams{}, 1);
    const EigenSystem eig = analytic_eigensystem(spins, 1.0, 1);
    CHECK(eigen_residual(op, eig) < 1e-10);
  }
}

TEST_CASE("the 1/2^N prefactor does not give unit vectors") {
  const Eigen::MatrixXd good = analytic_eigenvectors(4, EigenvectorNormalization::unit);
  const Eigen::MatrixXd bad = analytic_eigenvectors(4, EigenvectorNormalization::printed_prefactor);
  CHECK(good.col(0).norm() == doctest::Approx(1.0).epsilon(1e-14));
  // The two differ by 2^{-N/2}.
  CHECK(bad.col(0).norm() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(orthonormality_residual(bad) > 0.5);
}
