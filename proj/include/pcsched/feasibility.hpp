// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

#include "pcsched/rate_model.hpp"
#include "pcsched/topology.hpp"

namespace pcsched {

/// Power vector realizing a target rate vector, or the reason none exists.
struct PowerSolution {
  enum class Status {
    Feasible,
    Singular,       // SINR system singular or condition estimate above 1e12
    NegativePower,  // solved power non-positive for an active link
    PowerCap,       // solved power above the per-link cap
    Cst             // carrier-sense threshold exceeded at an active link
  };

  Status status{Status::Feasible};
  Eigen::VectorXd powers_mw;
  std::vector<Eigen::Index> active_set;

  bool feasible() const { return status == Status::Feasible; }
};

const char* to_string(PowerSolution::Status status);

/// Solves the SINR equality system over the active set {i : r_i > 0} and
/// checks power caps and the carrier-sense constraint. The returned vector is
/// the componentwise-minimal power vector meeting the SINR targets.
/// Pre: 0 <= target < saturation componentwise.
PowerSolution solve_powers(const Eigen::VectorXd& target_rates_mbps,
                           const NetworkInstance& instance, const RateCurve& curve);

enum class SinrCheck {
  Equality,        // achieved SINR within tol relative of target
  MeetsOrExceeds,  // achieved SINR >= target * (1 - tol)
};

struct Violation {
  enum class Kind {
    NegativePower,
    PowerCap,
    Cst,
    SinrMismatch,
    InactivePower,  // power > 0 on a link with zero target rate
    MissingPower,   // power == 0 on a link with positive target rate
    BadTarget,      // target rate at or above the saturation rate
  };
  Kind kind;
  Eigen::Index link;
  double margin;  // signed violation size, in the constraint's own units
};

const char* to_string(Violation::Kind kind);

struct VerifyReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Independent checker of every PowerSolution invariant for the given powers
/// and targets; backs the CLI `verify` subcommand. Never throws on bad data
/// (a target at or above saturation becomes a BadTarget violation).
VerifyReport verify(const Eigen::VectorXd& powers_mw,
                    const Eigen::VectorXd& target_rates_mbps,
                    const NetworkInstance& instance, const RateCurve& curve,
                    double tol = 1e-9, SinrCheck mode = SinrCheck::Equality);

}  // namespace pcsched
