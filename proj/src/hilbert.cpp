#include "dicke/hilbert.hpp"

#include "dicke/errors.hpp"

#include <algorithm>
#include <string>

namespace dicke {

SectorBasis::SectorBasis(std::int64_t spins, std::int64_t photons)
    : spins_(spins), photons_(photons), max_index_(std::min(spins, photons)) {
  if (spins < 1 || photons < 1) {
    throw InvalidArgument("sector needs at least one spin and one photon (got N=" +
                          std::to_string(spins) + ", n=" + std::to_string(photons) + ")");
  }
  if (spins > kMaxCount || photons > kMaxCount) {
    throw InvalidArgument("spin and photon counts are limited to 10^6");
  }
  if (max_index_ > kMaxSectorIndex) {
    throw InvalidArgument("sector dimension min(N, n) + 1 exceeds 10^4 + 1");
  }
}

SectorBasis build_sector(std::int64_t spins, std::int64_t photons) {
  return SectorBasis(spins, photons);
}

SectorState initial_state(const SectorBasis& basis) {
  SectorState state{basis, Eigen::VectorXcd::Zero(basis.dimension())};
  state.amplitudes[0] = 1.0;
  return state;
}

SectorState target_state(const SectorBasis& basis) {
  if (!basis.full_charge_reachable()) throw FullChargeUnreachable();
  SectorState state{basis, Eigen::VectorXcd::Zero(basis.dimension())};
  state.amplitudes[basis.spins()] = 1.0;
  return state;
}

}  // namespace dicke
