// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include "pcsched/topology.hpp"

namespace pcsched {

/// SINR -> rate mapping: a logistic in SINR-dB above the midpoint and its
/// tangent line below it, clamped at zero.
struct RateCurve {
  double saturation_mbps{51.8};  // L
  double midpoint_db{10.0};      // y0
  double slope_per_db{0.17};     // k

  void validate() const;
};

/// Alpha-fair utility parameters. `rate_floor_mbps` shifts U to U(r + floor)
/// so zero-rate allocations keep finite utility; weights sum to 1.
struct UtilityConfig {
  double alpha{1.0};
  Eigen::VectorXd weights;
  double rate_floor_mbps{1e-3};

  void validate() const;
  static UtilityConfig equal_weights(Eigen::Index n, double alpha = 1.0,
                                     double rate_floor_mbps = 1e-3);
};

/// SINR at receiver i for transmit powers x (mW).
double sinr(const Eigen::VectorXd& powers_mw, const NetworkInstance& instance,
            Eigen::Index i);

Eigen::VectorXd all_sinr(const Eigen::VectorXd& powers_mw, const NetworkInstance& instance);

/// Rate in Mbit/s for a linear SINR. With y = 10 log10(gamma):
///   y >= y0: L / (1 + exp(-k (y - y0)))
///   y <  y0: max(0, L (1/2 + (k/4) (y - y0)))    [tangent at the midpoint]
double rate_from_sinr(double gamma, const RateCurve& curve);

/// Exact inverse of rate_from_sinr on 0 < r < L. Throws std::domain_error
/// for r <= 0 (zero rates are handled by active-set logic, not inversion)
/// and for r >= L (no finite SINR attains the saturation rate).
double sinr_from_rate(double rate_mbps, const RateCurve& curve);

/// Alpha-fair utility of a single rate with additive floor: with
/// s = r + floor, log(s) for alpha == 1 and s^(1-alpha)/(1-alpha) otherwise.
/// Returns -inf when alpha >= 1 and s == 0.
double utility(double rate_mbps, double alpha, double rate_floor_mbps);

/// Inverse of `utility`. Values above the range of U (e.g. u >= 0 for
/// alpha > 1) throw std::domain_error; values below the range map to 0.
double utility_inverse(double u, double alpha, double rate_floor_mbps);

/// Weighted sum of per-user utilities; -inf propagates. Zero-weight
/// components are skipped entirely.
double system_utility(const Eigen::VectorXd& rates_mbps, const UtilityConfig& config);

/// utility_inverse under `config`; the Mbit/s scale used by termination
/// tests ("equivalent rate").
double equivalent_rate(double u, const UtilityConfig& config);

}  // namespace pcsched
