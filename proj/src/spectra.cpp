#include "dicke/spectra.hpp"

#include "dicke/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace dicke {

namespace {

using Float50 = boost::multiprecision::cpp_bin_float_50;

constexpr int kSweepsPerEigenvalue = 30;

void fix_signs(Eigen::MatrixXd& v) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
      if (std::abs(v(i, j)) > 1e-8) {
        if (v(i, j) < 0.0) v.col(j) *= -1.0;
        break;
      }
    }
  }
}

void check_range(std::int64_t spins, std::int64_t k, std::int64_t xi) {
  if (spins < 1) throw InvalidArgument("N must be >= 1");
  if (k < 0 || k > spins) throw InvalidArgument("polynomial degree k must lie in 0..N");
  if (xi < 0 || xi > spins) throw InvalidArgument("abscissa xi must lie in 0..N");
}

BigInt factorial(std::int64_t k) {
  BigInt f = 1;
  for (std::int64_t i = 2; i <= k; ++i) f *= i;
  return f;
}

double evaluate(const IntPolynomial& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + it->convert_to<double>();
  return acc;
}

}  // namespace

EigenSystem eigendecompose(const TridiagonalOperator& op) {
  const Eigen::Index n = op.dimension();
  if (n < 1) throw InvalidArgument("eigendecompose needs dimension >= 1");
  if (op.offdiagonal.size() != n - 1) throw DimensionMismatch("off-diagonal length must be dimension - 1");
  if (!op.diagonal.allFinite() || !op.offdiagonal.allFinite()) throw InvalidArgument("operator has non-finite entries");

  std::vector<double> d(op.diagonal.data(), op.diagonal.data() + n);
  std::vector<double> e(n, 0.0);
  for (Eigen::Index i = 0; i + 1 < n; ++i) e[i] = op.offdiagonal[i];
  Eigen::MatrixXd z = Eigen::MatrixXd::Identity(n, n);
  const double eps = std::numeric_limits<double>::epsilon();

  for (Eigen::Index l = 0; l < n; ++l) {
    int sweeps = 0;
    Eigen::Index m;
    do {
      for (m = l; m + 1 < n; ++m) {
        if (std::abs(e[m]) <= eps * (std::abs(d[m]) + std::abs(d[m + 1]))) break;
      }
      if (m != l) {
        if (sweeps++ == kSweepsPerEigenvalue) {
          throw NonConvergence("tridiagonal QL did not converge within 30 sweeps");
        }
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        Eigen::Index i;
        bool underflow = false;
        for (i = m - 1; i >= l; --i) {
          const double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            underflow = true;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (Eigen::Index k = 0; k < n; ++k) {
            const double t = z(k, i + 1);
            z(k, i + 1) = s * z(k, i) + c * t;
            z(k, i) = c * z(k, i) - s * t;
          }
        }
        if (underflow) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) { return d[a] < d[b]; });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.eigenvalues[j] = d[order[j]];
    out.eigenvectors.col(j) = z.col(order[j]);
  }
  fix_signs(out.eigenvectors);
  return out;
}

Eigen::VectorXd analytic_eigenvalues(std::int64_t spins, double coupling, std::int64_t photons) {
  if (spins < 1) throw InvalidArgument("N must be >= 1");
  const double unit = coupling * std::sqrt(static_cast<double>(photons));
  Eigen::VectorXd out(spins + 1);
  for (std::int64_t k = 0; k <= spins; ++k) out[k] = unit * static_cast<double>(spins - 2 * k);
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    c *= (n - k + i);
    c /= i;
  }
  return c;
}

BigInt pseudo_hermite(std::int64_t spins, std::int64_t k, std::int64_t xi) {
  check_range(spins, k, xi);
  const BigInt x = spins - 2 * xi;
  if (k == 0) return 1;
  BigInt prev = 1;
  BigInt curr = x;
  for (std::int64_t j = 2; j <= k; ++j) {
    BigInt next = x * curr - BigInt((j - 1) * (spins - j + 2)) * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

PseudoHermiteFamily pseudo_hermite_family(std::int64_t spins) {
  if (spins < 1) throw InvalidArgument("N must be >= 1");
  PseudoHermiteFamily family;
  family.spins = spins;
  family.values.assign(spins + 1, std::vector<BigInt>(spins + 1));
  for (std::int64_t xi = 0; xi <= spins; ++xi) {
    const BigInt x = spins - 2 * xi;
    family.values[0][xi] = 1;
    if (spins >= 1) family.values[1][xi] = x;
    for (std::int64_t k = 2; k <= spins; ++k) {
      family.values[k][xi] =
          x * family.values[k - 1][xi] - BigInt((k - 1) * (spins - k + 2)) * family.values[k - 2][xi];
    }
  }
  return family;
}

BigRational scaled_pseudo_hermite(std::int64_t spins, std::int64_t k, const BigRational& x) {
  if (spins < 1) throw InvalidArgument("N must be >= 1");
  if (k < 0 || k > spins) throw InvalidArgument("polynomial degree k must lie in 0..N");
  if (x < -1 || x > 1) throw InvalidArgument("scaled coordinate x must lie in [-1, 1]");
  const BigRational nx = BigRational(spins) * x;
  if (k == 0) return 1;
  BigRational prev = 1;
  BigRational curr = nx;
  for (std::int64_t j = 2; j <= k; ++j) {
    BigRational next = nx * curr - BigRational((j - 1) * (spins - j + 2)) * prev;
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

BigInt weighted_inner_product(std::int64_t spins, std::int64_t j, std::int64_t k) {
  check_range(spins, j, 0);
  check_range(spins, k, 0);
  BigInt sum = 0;
  for (std::int64_t xi = 0; xi <= spins; ++xi) {
    sum += binomial(spins, xi) * pseudo_hermite(spins, j, xi) * pseudo_hermite(spins, k, xi);
  }
  return sum;
}

IntPolynomial hermite_limit_polynomial(std::int64_t spins, std::int64_t k) {
  if (spins < 1 || k < 0) throw InvalidArgument("need N >= 1 and k >= 0");
  IntPolynomial prev{1};
  if (k == 0) return prev;
  IntPolynomial curr{0, BigInt(spins)};
  for (std::int64_t j = 2; j <= k; ++j) {
    IntPolynomial next(j + 1, BigInt(0));
    for (std::size_t p = 0; p < curr.size(); ++p) next[p + 1] += BigInt(spins) * curr[p];
    for (std::size_t p = 0; p < prev.size(); ++p) next[p] -= BigInt(spins * (j - 1)) * prev[p];
    prev = std::move(curr);
    curr = std::move(next);
  }
  return curr;
}

IntPolynomial rodrigues_polynomial(std::int64_t spins, std::int64_t k) {
  if (spins < 1 || k < 0) throw InvalidArgument("need N >= 1 and k >= 0");
  IntPolynomial q{1};
  for (std::int64_t step = 0; step < k; ++step) {
    IntPolynomial next(q.size() + 1, BigInt(0));
    for (std::size_t p = 1; p < q.size(); ++p) next[p - 1] += BigInt(static_cast<std::int64_t>(p)) * q[p];
    for (std::size_t p = 0; p < q.size(); ++p) next[p + 1] -= BigInt(spins) * q[p];
    q = std::move(next);
  }
  if (k % 2 == 1) {
    for (auto& c : q) c = -c;
  }
  while (q.size() > 1 && q.back() == 0) q.pop_back();
  return q;
}

double rodrigues_residual(std::int64_t spins, std::int64_t k, int grid_points) {
  if (k < 0 || k > spins) throw InvalidArgument("polynomial degree k must lie in 0..N");
  if (grid_points < 2) throw InvalidArgument("grid needs at least two points");
  const IntPolynomial recursion = hermite_limit_polynomial(spins, k);
  const IntPolynomial rodrigues = rodrigues_polynomial(spins, k);
  double worst = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = -1.0 + 2.0 * i / (grid_points - 1);
    worst = std::max(worst, std::abs(evaluate(recursion, x) - evaluate(rodrigues, x)));
  }
  return worst;
}

Eigen::MatrixXd analytic_eigenvectors(std::int64_t spins, EigenvectorNormalization normalization) {
  if (spins < 1) throw InvalidArgument("N must be >= 1");
  const PseudoHermiteFamily family = pseudo_hermite_family(spins);
  const BigInt two_pow_n = BigInt(1) << static_cast<unsigned>(spins);
  // Squared prefactor denominator: 2^N (k!)^2 C(N,k) for unit columns, 4^N (k!)^2 C(N,k) as printed.
  const BigInt power = normalization == EigenvectorNormalization::unit ? two_pow_n : two_pow_n * two_pow_n;

  Eigen::MatrixXd v(spins + 1, spins + 1);
  for (std::int64_t k = 0; k <= spins; ++k) {
    const BigInt fk = factorial(k);
    const BigInt denominator = power * fk * fk * binomial(spins, k);
    for (std::int64_t xi = 0; xi <= spins; ++xi) {
      const BigInt& p = family(k, xi);
      if (p == 0) {
        v(xi, k) = 0.0;
        continue;
      }
      const BigInt numerator = binomial(spins, xi) * p * p;
      const Float50 magnitude = sqrt(Float50(numerator) / Float50(denominator));
      v(xi, k) = (p < 0 ? -1.0 : 1.0) * magnitude.convert_to<double>();
    }
  }
  return v;
}

EigenSystem analytic_eigensystem(std::int64_t spins, double coupling, std::int64_t photons) {
  const Eigen::VectorXd values = analytic_eigenvalues(spins, coupling, photons);
  const Eigen::MatrixXd vectors = analytic_eigenvectors(spins);
  EigenSystem out;
  out.eigenvalues = values.reverse();
  out.eigenvectors = vectors.rowwise().reverse();
  return out;
}

double orthonormality_residual(const Eigen::MatrixXd& v) {
  const Eigen::MatrixXd gram = v.transpose() * v;
  return (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

double eigen_residual(const TridiagonalOperator& op, const EigenSystem& eig) {
  if (eig.dimension() != op.dimension()) throw DimensionMismatch("eigensystem does not match operator");
  const Eigen::MatrixXd t = op.dense();
  double worst = 0.0;
  for (Eigen::Index j = 0; j < eig.dimension(); ++j) {
    const Eigen::VectorXd r = t * eig.eigenvectors.col(j) - eig.eigenvalues[j] * eig.eigenvectors.col(j);
    worst = std::max(worst, r.norm());
  }
  return worst;
}

}  // namespace dicke
