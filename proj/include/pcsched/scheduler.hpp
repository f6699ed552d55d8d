// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "pcsched/bnb_solver.hpp"

namespace pcsched {

/// Per-user average-rate history driving slot-by-slot weights.
struct ScheduleState {
  Eigen::VectorXd avg_rates_mbps;  // running mean over completed slots
  std::uint64_t slot{0};
  double alpha{1.0};
  double weight_floor_mbps{1e-3};
};

struct SchedulerConfig {
  double alpha{1.0};
  double weight_floor_mbps{1e-3};
  double rate_floor_mbps{1e-3};  // floor inside the per-slot utility
  SolveOptions solve;
};

/// w_i proportional to 1/max(R_i, floor)^alpha, normalized to sum 1.
Eigen::VectorXd compute_weights(const Eigen::VectorXd& avg_rates_mbps, double alpha,
                                double weight_floor_mbps);

struct SlotResult {
  Eigen::VectorXd weights;
  Eigen::VectorXd rates_mbps;
  Eigen::VectorXd powers_mw;
  SolveStatus status{SolveStatus::Optimal};
};

/// One slot: history weights, a weighted-sum-rate power-control solve
/// (per-slot alpha = 0, which permits zero instantaneous rates), then the
/// running-mean update R := (slot*R + r)/(slot+1).
SlotResult step(ScheduleState& state, const NetworkInstance& instance,
                const RateCurve& curve, const SchedulerConfig& config);

struct ScheduleRun {
  Eigen::VectorXd avg_rates_mbps;
  std::vector<SlotResult> slots;
};

ScheduleRun run(const NetworkInstance& instance, const RateCurve& curve,
                const SchedulerConfig& config, std::uint64_t slots);

/// Per-slot trace CSV: slot, user, rate_mbps, power_dbm_or_off, weight.
std::string schedule_csv(const ScheduleRun& run);

}  // namespace pcsched
