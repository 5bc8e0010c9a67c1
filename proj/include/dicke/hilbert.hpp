#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace dicke {

/// Conserved-excitation sector {|J=N/2, M=-N/2+k, n-k>}, k = 0..K with K = min(N, n).
///
/// Index 0 is the all-down state holding every photon; index k has k spins
/// flipped up and n-k photons left in the cavity. The excitation number
/// a^dag a + S_z equals n - N/2 for every member.
class SectorBasis {
 public:
  static constexpr std::int64_t kMaxCount = 1'000'000;
  static constexpr std::int64_t kMaxSectorIndex = 10'000;

  SectorBasis(std::int64_t spins, std::int64_t photons);

  std::int64_t spins() const { return spins_; }
  std::int64_t photons() const { return photons_; }
  std::int64_t max_index() const { return max_index_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(max_index_ + 1); }

  double total_spin() const { return 0.5 * static_cast<double>(spins_); }
  double spin_projection(std::int64_t k) const { return -total_spin() + static_cast<double>(k); }
  std::int64_t photons_at(std::int64_t k) const { return photons_ - k; }
  double excitation_number() const { return static_cast<double>(photons_) - total_spin(); }

  /// True when the all-up state is a member, i.e. n >= N.
  bool full_charge_reachable() const { return photons_ >= spins_; }

  friend bool operator==(const SectorBasis&, const SectorBasis&) = default;

 private:
  std::int64_t spins_;
  std::int64_t photons_;
  std::int64_t max_index_;
};

/// Battery-charger wavefunction expanded on a SectorBasis.
struct SectorState {
  SectorBasis basis;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
  double population(Eigen::Index k) const { return std::norm(amplitudes[k]); }
};

SectorBasis build_sector(std::int64_t spins, std::int64_t photons);

/// |down...down> (x) |n>.
SectorState initial_state(const SectorBasis& basis);

/// |up...up> (x) |n-N>; throws FullChargeUnreachable when n < N.
SectorState target_state(const SectorBasis& basis);

}  // namespace dicke
