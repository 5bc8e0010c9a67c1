#include "dicke/operators.hpp"

#include "dicke/errors.hpp"

#include <cmath>

namespace dicke {

void ModelParams::validate() const {
  if (!(coupling > 0.0) || !std::isfinite(coupling)) throw InvalidArgument("coupling must be positive");
  if (!(omega > 0.0) || !std::isfinite(omega)) throw InvalidArgument("omega must be positive");
  if (!(t_off > 0.0)) throw InvalidArgument("t_off must be positive");
}

Eigen::VectorXcd TridiagonalOperator::apply(const Eigen::VectorXcd& v) const {
  const Eigen::Index dim = dimension();
  if (v.size() != dim) throw DimensionMismatch("vector size does not match operator dimension");
  Eigen::VectorXcd out(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    std::complex<double> acc = diagonal[i] * v[i];
    if (i > 0) acc += offdiagonal[i - 1] * v[i - 1];
    if (i + 1 < dim) acc += offdiagonal[i] * v[i + 1];
    out[i] = acc;
  }
  return out;
}

Eigen::MatrixXd TridiagonalOperator::dense() const {
  const Eigen::Index dim = dimension();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  m.diagonal() = diagonal;
  for (Eigen::Index i = 0; i + 1 < dim; ++i) {
    m(i, i + 1) = offdiagonal[i];
    m(i + 1, i) = offdiagonal[i];
  }
  return m;
}

namespace {

double largest_entry(const TridiagonalOperator& op) {
  double s = 0.0;
  if (op.diagonal.size() > 0) s = op.diagonal.cwiseAbs().maxCoeff();
  if (op.offdiagonal.size() > 0) s = std::max(s, op.offdiagonal.cwiseAbs().maxCoeff());
  return s > 0.0 ? s : 1.0;
}

}  // namespace

Eigen::VectorXd rest_diagonal(const SectorBasis& basis, const ModelParams& params) {
  Eigen::VectorXd d(basis.dimension());
  for (std::int64_t k = 0; k <= basis.max_index(); ++k) {
    d[k] = params.omega * (static_cast<double>(basis.photons_at(k)) + basis.spin_projection(k));
  }
  return d;
}

TridiagonalOperator exact_tc_matrix(const SectorBasis& basis, const ModelParams& params) {
  params.validate();
  const std::int64_t spins = basis.spins();
  const std::int64_t photons = basis.photons();
  TridiagonalOperator op;
  op.diagonal = rest_diagonal(basis, params);
  op.offdiagonal.resize(basis.max_index());
  for (std::int64_t k = 0; k < basis.max_index(); ++k) {
    // S_+ |J, M_k> = sqrt((N-k)(k+1)) |J, M_k + 1>,  a |n-k> = sqrt(n-k) |n-k-1>
    const double product = static_cast<double>(photons - k) * static_cast<double>(spins - k) *
                           static_cast<double>(k + 1);
    op.offdiagonal[k] = params.coupling * std::sqrt(product);
  }
  op.scale = largest_entry(op);
  return op;
}

double ladder_weight(std::int64_t spins, std::int64_t k) {
  return std::sqrt(static_cast<double>(spins - k + 1)) * std::sqrt(static_cast<double>(k));
}

TridiagonalOperator large_n_matrix(std::int64_t spins, const ModelParams& params, std::int64_t photons) {
  if (spins < 1 || photons < 1) throw InvalidArgument("large-n operator needs N >= 1 and n >= 1");
  if (spins > SectorBasis::kMaxSectorIndex) throw InvalidArgument("N exceeds 10^4");
  params.validate();
  const double unit = params.coupling * std::sqrt(static_cast<double>(photons));
  TridiagonalOperator op;
  op.diagonal = Eigen::VectorXd::Zero(spins + 1);
  op.offdiagonal.resize(spins);
  for (std::int64_t k = 1; k <= spins; ++k) op.offdiagonal[k - 1] = unit * ladder_weight(spins, k);
  op.scale = largest_entry(op);
  return op;
}

bool coupling_commutes_with_rest(const SectorBasis& basis, const ModelParams& params) {
  const TridiagonalOperator full = exact_tc_matrix(basis, params);
  const Eigen::VectorXd rest = rest_diagonal(basis, params);
  // [C, R]_{ij} = C_ij (R_jj - R_ii) for diagonal R; C only couples neighbours.
  double worst = 0.0;
  for (Eigen::Index i = 0; i < full.offdiagonal.size(); ++i) {
    worst = std::max(worst, std::abs(full.offdiagonal[i] * (rest[i + 1] - rest[i])));
  }
  return worst < 1e-10 * full.scale;
}

}  // namespace dicke
