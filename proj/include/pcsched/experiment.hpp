// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pcsched/bnb_solver.hpp"
#include "pcsched/rate_model.hpp"
#include "pcsched/scheduler.hpp"
#include "pcsched/topology.hpp"

namespace pcsched {

enum class Mode { BaselineMaxPower, PurePc, PcSched };

const char* to_string(Mode mode);
Mode mode_from_string(const std::string& name);

struct TopologyBlock {
  enum class Kind { Hex7, Explicit, Matrices };
  Kind kind{Kind::Hex7};
  // hex7
  double isd_m{20.0};
  double ap_height_m{6.0};
  double sta_height_m{1.0};
  double sta_offset_m{2.0};
  // explicit positions
  NodePlacement placement;
  // raw matrices (noise/power/cst in mW, overriding the radio block)
  NetworkInstance matrices;
};

struct RadioBlock {
  double carrier_freq_ghz{5.21};
  double noise_dbm{-94.0};
  double max_power_dbm{20.0};
  double cst_dbm{-62.0};
};

struct SolverBlock {
  double alpha{1.0};
  double epsilon_mbps{0.1};
  double rate_floor_mbps{1e-3};
  std::uint64_t max_iterations{100000};
};

struct SchedulerBlock {
  std::uint64_t slots{40};
  double weight_floor_mbps{1e-3};
};

struct SweepBlock {
  std::vector<double> isd_m{2, 5, 10, 15, 20, 30, 40, 60, 80};
  std::vector<Mode> modes{Mode::BaselineMaxPower, Mode::PurePc, Mode::PcSched};
  std::uint64_t seed{1};
};

struct ExperimentConfig {
  TopologyBlock topology;
  RadioBlock radio;
  RateCurve curve;
  SolverBlock solver;
  SchedulerBlock scheduler;
  SweepBlock sweep;
};

/// Strict JSON parsing: unknown keys and missing required blocks are errors
/// (std::runtime_error with the offending path in the message).
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::string& path);

/// Instance for the configured topology; hex topologies take isd/seed from
/// the arguments so sweep cells can vary them.
NetworkInstance instance_from_config(const ExperimentConfig& config, double isd_m,
                                     std::uint64_t seed);

SolveOptions solve_options(const ExperimentConfig& config);
SchedulerConfig scheduler_config(const ExperimentConfig& config);

struct ModeResult {
  Eigen::VectorXd rates_mbps;
  bool iteration_limited{false};
};

/// baseline-maxpower: everyone at the cap, CST ignored (legacy approximation);
/// pure-pc: one equal-weight solve; pc-sched: scheduler average over slots.
ModeResult run_mode(const NetworkInstance& instance, const RateCurve& curve,
                    const ExperimentConfig& config, Mode mode);

struct SweepRow {
  double isd_m;
  Mode mode;
  double geo_mean_mbps;
  double arith_mean_mbps;
  Eigen::VectorXd user_rates_mbps;
  bool iteration_limited{false};
};

std::vector<SweepRow> run_sweep(const ExperimentConfig& config);

/// Rows sorted by isd then mode name; 6-significant-digit formatting; the
/// rate floor used inside the geometric mean is recorded in a header comment.
std::string sweep_csv(const std::vector<SweepRow>& rows, double rate_floor_mbps);

double geometric_mean(const Eigen::VectorXd& rates_mbps, double rate_floor_mbps);
double arithmetic_mean(const Eigen::VectorXd& rates_mbps);

}  // namespace pcsched
