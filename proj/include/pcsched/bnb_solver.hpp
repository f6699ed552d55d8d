// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pcsched/feasibility.hpp"
#include "pcsched/rate_model.hpp"
#include "pcsched/topology.hpp"

namespace pcsched {

/// Axis-aligned hyperrectangle [lower, upper] in rate space with a sound
/// utility upper bound for its feasible points.
struct Box {
  Eigen::VectorXd lower;  // p
  Eigen::VectorXd upper;  // q
  double utility_bound{0.0};
  std::uint64_t insertion_id{0};
};

enum class SolveStatus { Optimal, IterationLimit };

const char* to_string(SolveStatus status);

struct TraceRow {
  std::uint64_t iteration;
  std::size_t live_boxes;
  double best_eqrate;
  double bound_eqrate;
};

struct SolveResult {
  SolveStatus status{SolveStatus::Optimal};
  Eigen::VectorXd rates_mbps;
  Eigen::VectorXd powers_mw;
  double utility{0.0};
  std::uint64_t iterations{0};
  std::vector<TraceRow> trace;
};

/// Branch-and-bound working set: the live boxes (a binary heap keyed by
/// utility bound descending, insertion id ascending) plus the incumbent.
struct SolverState {
  std::vector<Box> boxes;
  Eigen::VectorXd best_rates;
  Eigen::VectorXd best_powers_mw;
  double best_utility{0.0};
  double epsilon_mbps{0.1};
  std::uint64_t next_insertion_id{0};
  std::uint64_t iterations{0};
  bool terminal{false};  // utopia point was feasible at initialization

  const Box& top() const;
  Box pop();
  void push(Box box);
};

struct SolveOptions {
  double epsilon_mbps{0.1};
  std::uint64_t max_iterations{100000};
  bool keep_trace{false};
  /// Invoked after each completed iteration; test hook for invariant audits.
  std::function<void(const SolverState&)> observer;
};

/// Per-link rates with interference removed: component i is
/// rate_from_sinr(a_ii * xhat_i / n_i).
Eigen::VectorXd utopia_point(const NetworkInstance& instance, const RateCurve& curve);

/// If the utopia point is feasible the state is terminal and already holds
/// the solution; otherwise one box [0, utopia] with bound U(utopia), a zero
/// incumbent and u_best = U(0).
SolverState initialize(const NetworkInstance& instance, const RateCurve& curve,
                       const UtilityConfig& config, double epsilon_mbps);

/// Midpoint split along the longest side (ties to the lowest index).
/// Children inherit the utility bound and receive fresh insertion ids.
/// Throws std::logic_error on a box with no positive side.
std::pair<Box, Box> branch(const Box& box, std::uint64_t& next_insertion_id);

/// Tightens the box corners using utility levels: the lower boundary from
/// u_best (points that cannot beat the incumbent), the upper boundary from
/// the box's own bound. Returns std::nullopt when the box is proved empty of
/// candidate points.
std::optional<Box> reduce(Box box, double u_best, const UtilityConfig& config);

struct BoundResult {
  bool keep{true};         // false: box contains no feasible point
  bool upper_feasible{false};  // q itself was feasible
  Eigen::VectorXd l;       // feasible bisection endpoint (when bisected)
  Eigen::VectorXd h;       // infeasible bisection endpoint (when bisected)
};

/// Bounding step: if q is feasible the bound becomes U(q); otherwise a
/// bisection along the box diagonal locates the feasibility frontier, the
/// corner-point bound caps utility_bound, and the feasible endpoint may
/// improve the incumbent. Boxes whose lower corner is infeasible contain no
/// feasible point (downward-closed feasibility) and are dropped.
BoundResult bound(Box& box, const NetworkInstance& instance, const RateCurve& curve,
                  const UtilityConfig& config, SolverState& state);

/// Global optimizer over rate vectors. Terminates when no remaining box can
/// improve the incumbent by more than epsilon in equivalent-rate terms.
SolveResult solve(const NetworkInstance& instance, const RateCurve& curve,
                  const UtilityConfig& config, const SolveOptions& options = {});

std::string trace_csv(const std::vector<TraceRow>& trace);

}  // namespace pcsched
