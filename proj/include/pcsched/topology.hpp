// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace pcsched {

struct Vec3 {
  double x{0.0};
  double y{0.0};
  double z{0.0};
};

double distance(const Vec3& a, const Vec3& b);

/// Transmitter/receiver positions for N links, one traffic flow per pair.
struct NodePlacement {
  std::vector<Vec3> tx;
  std::vector<Vec3> rx;

  Eigen::Index size() const { return static_cast<Eigen::Index>(tx.size()); }
  /// Throws std::invalid_argument on mismatched sizes, non-finite
  /// coordinates or a pair whose transmitter and receiver coincide.
  void validate() const;
};

/// Immutable link-gain description of a network. All powers are linear
/// milliwatts; dB/dBm appear only at configuration and reporting boundaries.
struct NetworkInstance {
  Eigen::MatrixXd gain_rx;       // (i,j): tx j -> rx i; diagonal > 0
  Eigen::MatrixXd gain_tx;       // (i,j): tx j -> tx i; diagonal == 0
  Eigen::VectorXd noise_mw;      // > 0
  Eigen::VectorXd max_power_mw;  // > 0
  double cst_mw{0.0};            // carrier-sense threshold, > 0

  Eigen::Index size() const { return noise_mw.size(); }
  void validate() const;
};

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

/// Pathloss in dB at distance r (meters) and carrier frequency f_c (GHz):
/// 40.05 + 20 log10(f_c/2.4) + 20 log10(min(r,10)) + [r>10] 35 log10(0.1 r).
/// Throws std::domain_error for non-positive distance or frequency.
double pathloss_db(double distance_m, double carrier_freq_ghz);

/// Seven APs on a hexagonal grid: one at the origin, six at distance isd and
/// angles k*60 deg, all at ap_height. Each receiver sits sta_offset meters
/// from its AP in the horizontal plane at a seed-deterministic uniform angle,
/// at sta_height. Same seed, same placement.
NodePlacement hex7_placement(double isd_m, double ap_height_m, double sta_height_m,
                             double sta_offset_m, std::uint64_t seed);

/// Gain matrices from pairwise pathloss; dBm knobs converted to milliwatts.
NetworkInstance build_instance(const NodePlacement& placement, double carrier_freq_ghz,
                               double noise_dbm, double max_power_dbm, double cst_dbm);

}  // namespace pcsched
