// SPDX-License-Identifier: Apache-2.0
#include "pcsched/topology.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace pcsched {

double distance(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  const double dz = a.z - b.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

namespace {

bool finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

}  // namespace

void NodePlacement::validate() const {
  if (tx.size() != rx.size()) {
    throw std::invalid_argument("placement: tx/rx pair counts differ");
  }
  for (std::size_t i = 0; i < tx.size(); ++i) {
    if (!finite(tx[i]) || !finite(rx[i])) {
      throw std::invalid_argument("placement: non-finite coordinate at pair " +
                                  std::to_string(i));
    }
    if (distance(tx[i], rx[i]) == 0.0) {
      throw std::invalid_argument("placement: transmitter and receiver coincide at pair " +
                                  std::to_string(i));
    }
  }
}

void NetworkInstance::validate() const {
  const Eigen::Index n = size();
  if (n <= 0) throw std::invalid_argument("instance: empty");
  if (gain_rx.rows() != n || gain_rx.cols() != n || gain_tx.rows() != n ||
      gain_tx.cols() != n || max_power_mw.size() != n) {
    throw std::invalid_argument("instance: dimension mismatch");
  }
  if (!gain_rx.allFinite() || !gain_tx.allFinite() || !noise_mw.allFinite() ||
      !max_power_mw.allFinite() || !std::isfinite(cst_mw)) {
    throw std::invalid_argument("instance: non-finite entry");
  }
  if ((gain_rx.array() < 0.0).any() || (gain_tx.array() < 0.0).any()) {
    throw std::invalid_argument("instance: negative gain");
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    if (gain_rx(i, i) <= 0.0) {
      throw std::invalid_argument("instance: direct gain must be positive (link " +
                                  std::to_string(i) + ")");
    }
    if (gain_tx(i, i) != 0.0) {
      throw std::invalid_argument("instance: tx-tx self gain must be zero (link " +
                                  std::to_string(i) + ")");
    }
  }
  if ((noise_mw.array() <= 0.0).any()) throw std::invalid_argument("instance: noise must be positive");
  if ((max_power_mw.array() <= 0.0).any()) {
    throw std::invalid_argument("instance: power cap must be positive");
  }
  if (cst_mw <= 0.0) throw std::invalid_argument("instance: carrier-sense threshold must be positive");
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double pathloss_db(double distance_m, double carrier_freq_ghz) {
  if (!(distance_m > 0.0)) throw std::domain_error("pathloss: distance must be positive");
  if (!(carrier_freq_ghz > 0.0)) throw std::domain_error("pathloss: frequency must be positive");
  double loss = 40.05 + 20.0 * std::log10(carrier_freq_ghz / 2.4) +
                20.0 * std::log10(std::min(distance_m, 10.0));
  if (distance_m > 10.0) loss += 35.0 * std::log10(0.1 * distance_m);
  return loss;
}

NodePlacement hex7_placement(double isd_m, double ap_height_m, double sta_height_m,
                             double sta_offset_m, std::uint64_t seed) {
  if (!(isd_m > 0.0)) throw std::domain_error("hex7: inter-site distance must be positive");
  if (ap_height_m < 0.0 || sta_height_m < 0.0) {
    throw std::domain_error("hex7: heights must be non-negative");
  }
  if (sta_offset_m < 0.0) throw std::domain_error("hex7: sta offset must be non-negative");

  NodePlacement placement;
  placement.tx.reserve(7);
  placement.rx.reserve(7);
  placement.tx.push_back({0.0, 0.0, ap_height_m});
  for (int k = 0; k < 6; ++k) {
    const double angle = k * std::numbers::pi / 3.0;
    placement.tx.push_back({isd_m * std::cos(angle), isd_m * std::sin(angle), ap_height_m});
  }

  // Portable uniform angles: 53 high bits of the generator output, so the
  // placement is bit-reproducible across standard libraries.
  std::mt19937_64 rng(seed);
  for (const Vec3& ap : placement.tx) {
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double angle = 2.0 * std::numbers::pi * u;
    placement.rx.push_back({ap.x + sta_offset_m * std::cos(angle),
                            ap.y + sta_offset_m * std::sin(angle), sta_height_m});
  }
  placement.validate();
  return placement;
}

NetworkInstance build_instance(const NodePlacement& placement, double carrier_freq_ghz,
                               double noise_dbm, double max_power_dbm, double cst_dbm) {
  placement.validate();
  const Eigen::Index n = placement.size();

  NetworkInstance instance;
  instance.gain_rx.resize(n, n);
  instance.gain_tx.setZero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d_rx = distance(placement.tx[j], placement.rx[i]);
      if (d_rx == 0.0) {
        throw std::domain_error("build_instance: transmitter " + std::to_string(j) +
                                " coincides with receiver " + std::to_string(i));
      }
      instance.gain_rx(i, j) = std::pow(10.0, -pathloss_db(d_rx, carrier_freq_ghz) / 10.0);
      if (i != j) {
        const double d_tx = distance(placement.tx[j], placement.tx[i]);
        if (d_tx == 0.0) {
          throw std::domain_error("build_instance: transmitters " + std::to_string(i) +
                                  " and " + std::to_string(j) + " coincide");
        }
        instance.gain_tx(i, j) = std::pow(10.0, -pathloss_db(d_tx, carrier_freq_ghz) / 10.0);
      }
    }
  }
  instance.noise_mw = Eigen::VectorXd::Constant(n, dbm_to_mw(noise_dbm));
  instance.max_power_mw = Eigen::VectorXd::Constant(n, dbm_to_mw(max_power_dbm));
  instance.cst_mw = dbm_to_mw(cst_dbm);
  instance.validate();
  return instance;
}

}  // namespace pcsched
