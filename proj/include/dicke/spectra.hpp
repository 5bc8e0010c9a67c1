#pragma once

#include "dicke/operators.hpp"

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Eigenvalues in ascending order; column j of `eigenvectors` pairs with eigenvalue j.
struct EigenSystem {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;

  Eigen::Index dimension() const { return eigenvalues.size(); }
};

/// Implicit-shift QL on a symmetric tridiagonal operator.
///
/// Off-diagonals deflate once |e_m| <= eps (|d_m| + |d_{m+1}|). Each eigenvalue
/// gets at most 30 sweeps; exceeding that throws NonConvergence. Eigenvectors
/// are sign-fixed so their first non-negligible component is positive, which
/// makes the output deterministic.
EigenSystem eigendecompose(const TridiagonalOperator& op);

/// g sqrt(n) (N - 2k) for k = 0..N (descending, as the closed form is usually written).
Eigen::VectorXd analytic_eigenvalues(std::int64_t spins, double coupling, std::int64_t photons);

/// P_k(xi) from P_0 = 1, P_1 = N - 2 xi, P_k = (N - 2 xi) P_{k-1} - (k-1)(N-k+2) P_{k-2}.
BigInt pseudo_hermite(std::int64_t spins, std::int64_t k, std::int64_t xi);

/// Table of P_k(xi) for k, xi in 0..N (row k, column xi).
struct PseudoHermiteFamily {
  std::int64_t spins = 0;
  std::vector<std::vector<BigInt>> values;

  const BigInt& operator()(std::int64_t k, std::int64_t xi) const { return values[k][xi]; }
};

PseudoHermiteFamily pseudo_hermite_family(std::int64_t spins);

/// The same family written in the coordinate x = (N - 2 xi) / N, so that
/// scaled_pseudo_hermite(N, k, (N - 2 xi)/N) == pseudo_hermite(N, k, xi).
BigRational scaled_pseudo_hermite(std::int64_t spins, std::int64_t k, const BigRational& x);

/// sum_xi C(N, xi) P_j(xi) P_k(xi); zero for j != k and 2^N (k!)^2 C(N, k) for j == k.
BigInt weighted_inner_product(std::int64_t spins, std::int64_t j, std::int64_t k);

BigInt binomial(std::int64_t n, std::int64_t k);

/// Integer polynomial, coefficients in ascending powers of x.
using IntPolynomial = std::vector<BigInt>;

/// Large-N limit recursion P_0 = 1, P_1 = N x, P_k = N x P_{k-1} - N (k-1) P_{k-2}.
IntPolynomial hermite_limit_polynomial(std::int64_t spins, std::int64_t k);

/// (-1)^k exp(N x^2 / 2) d^k/dx^k exp(-N x^2 / 2), by exact differentiation of
/// q(x) exp(-N x^2 / 2): q -> q' - N x q.
IntPolynomial rodrigues_polynomial(std::int64_t spins, std::int64_t k);

/// Max |hermite_limit - rodrigues| over a uniform grid on [-1, 1].
double rodrigues_residual(std::int64_t spins, std::int64_t k, int grid_points = 2001);

enum class EigenvectorNormalization {
  unit,              ///< 1 / (2^{N/2} k! sqrt(C(N,k))): orthonormal columns
  printed_prefactor  ///< 1 / (2^N k! sqrt(C(N,k))): not unit length for N >= 1
};

/// Column k holds sqrt(C(N, xi)) P_k(xi) times the normalization; it is an
/// eigenvector of the large-n operator (in units of g sqrt(n)) with eigenvalue N - 2k.
Eigen::MatrixXd analytic_eigenvectors(std::int64_t spins,
                                      EigenvectorNormalization normalization = EigenvectorNormalization::unit);

/// Closed-form eigensystem of large_n_matrix, reordered to ascending eigenvalues.
EigenSystem analytic_eigensystem(std::int64_t spins, double coupling, std::int64_t photons);

/// max |V^T V - I|.
double orthonormality_residual(const Eigen::MatrixXd& v);

/// max_j ||T v_j - lambda_j v_j||.
double eigen_residual(const TridiagonalOperator& op, const EigenSystem& eig);

}  // namespace dicke
