// SPDX-License-Identifier: Apache-2.0
#include "pcsched/rate_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pcsched {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void RateCurve::validate() const {
  if (!(saturation_mbps > 0.0)) throw std::invalid_argument("rate curve: saturation must be positive");
  if (!(slope_per_db > 0.0)) throw std::invalid_argument("rate curve: slope must be positive");
  if (!std::isfinite(midpoint_db)) throw std::invalid_argument("rate curve: midpoint must be finite");
}

void UtilityConfig::validate() const {
  if (!(alpha >= 0.0)) throw std::invalid_argument("utility: alpha must be non-negative");
  if (!(rate_floor_mbps >= 0.0)) throw std::invalid_argument("utility: rate floor must be non-negative");
  if (weights.size() == 0) throw std::invalid_argument("utility: weights are empty");
  if ((weights.array() < 0.0).any()) throw std::invalid_argument("utility: negative weight");
  if (std::abs(weights.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument("utility: weights must sum to 1");
  }
}

UtilityConfig UtilityConfig::equal_weights(Eigen::Index n, double alpha,
                                           double rate_floor_mbps) {
  UtilityConfig config;
  config.alpha = alpha;
  config.rate_floor_mbps = rate_floor_mbps;
  config.weights = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  return config;
}

double sinr(const Eigen::VectorXd& powers_mw, const NetworkInstance& instance,
            Eigen::Index i) {
  double interference = 0.0;
  for (Eigen::Index j = 0; j < instance.size(); ++j) {
    if (j != i) interference += instance.gain_rx(i, j) * powers_mw(j);
  }
  return instance.gain_rx(i, i) * powers_mw(i) / (instance.noise_mw(i) + interference);
}

Eigen::VectorXd all_sinr(const Eigen::VectorXd& powers_mw, const NetworkInstance& instance) {
  Eigen::VectorXd out(instance.size());
  for (Eigen::Index i = 0; i < instance.size(); ++i) out(i) = sinr(powers_mw, instance, i);
  return out;
}

double rate_from_sinr(double gamma, const RateCurve& curve) {
  if (!(gamma >= 0.0)) throw std::domain_error("rate_from_sinr: SINR must be non-negative");
  if (gamma == 0.0) return 0.0;
  const double y = 10.0 * std::log10(gamma);
  const double L = curve.saturation_mbps;
  const double k = curve.slope_per_db;
  const double y0 = curve.midpoint_db;
  if (y >= y0) return L / (1.0 + std::exp(-k * (y - y0)));
  return std::max(0.0, L * (0.5 + 0.25 * k * (y - y0)));
}

double sinr_from_rate(double rate_mbps, const RateCurve& curve) {
  const double L = curve.saturation_mbps;
  if (!(rate_mbps > 0.0)) throw std::domain_error("sinr_from_rate: rate must be positive");
  if (rate_mbps >= L) {
    throw std::domain_error("sinr_from_rate: rate at or above saturation is unattainable");
  }
  const double k = curve.slope_per_db;
  const double y0 = curve.midpoint_db;
  double y;
  if (rate_mbps >= 0.5 * L) {
    y = y0 - std::log(L / rate_mbps - 1.0) / k;
  } else {
    y = y0 + (rate_mbps / L - 0.5) / (0.25 * k);
  }
  return std::pow(10.0, y / 10.0);
}

double utility(double rate_mbps, double alpha, double rate_floor_mbps) {
  if (!(rate_mbps >= 0.0)) throw std::domain_error("utility: rate must be non-negative");
  const double s = rate_mbps + rate_floor_mbps;
  if (alpha == 1.0) return std::log(s);
  if (alpha == 0.0) return s;
  // pow(0, negative) = +inf, and dividing by the negative 1-alpha yields -inf.
  return std::pow(s, 1.0 - alpha) / (1.0 - alpha);
}

double utility_inverse(double u, double alpha, double rate_floor_mbps) {
  double s;
  if (alpha == 1.0) {
    s = std::exp(u);  // exp(-inf) == 0
  } else if (alpha == 0.0) {
    s = u;
  } else {
    const double scaled = (1.0 - alpha) * u;
    if (alpha > 1.0) {
      if (u >= 0.0) throw std::domain_error("utility_inverse: value above the range of U");
      s = std::pow(scaled, 1.0 / (1.0 - alpha));
    } else {
      if (u == kInf) throw std::domain_error("utility_inverse: value above the range of U");
      s = scaled <= 0.0 ? 0.0 : std::pow(scaled, 1.0 / (1.0 - alpha));
    }
  }
  // Values below U(0) (possible only with a positive floor) clamp to rate 0.
  return std::max(0.0, s - rate_floor_mbps);
}

double system_utility(const Eigen::VectorXd& rates_mbps, const UtilityConfig& config) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < rates_mbps.size(); ++i) {
    const double w = config.weights(i);
    if (w == 0.0) continue;
    total += w * utility(rates_mbps(i), config.alpha, config.rate_floor_mbps);
  }
  return total;
}

double equivalent_rate(double u, const UtilityConfig& config) {
  return utility_inverse(u, config.alpha, config.rate_floor_mbps);
}

}  // namespace pcsched
