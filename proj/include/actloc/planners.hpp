#pragma once

#include <numbers>
#include <span>
#include <vector>

#include "actloc/geometry.hpp"
#include "actloc/histogram.hpp"
#include "actloc/rng.hpp"

namespace actloc {

/// K equally spaced candidate headings covering [0, 2*pi).
class ActionSet {
 public:
  explicit ActionSet(int count) : count_(count) {
    if (count < 4)
      throw std::invalid_argument("action set needs at least 4 headings");
  }

  int count() const { return count_; }
  double heading(int k) const { return 2.0 * std::numbers::pi * k / count_; }
  std::vector<double> headings() const {
    std::vector<double> hs(count_);
    for (int k = 0; k < count_; ++k) hs[k] = heading(k);
    return hs;
  }

 private:
  int count_;
};

/// Ordered sensor positions; consecutive points at most one step apart.
struct Trajectory {
  std::vector<Point2> points;
};

struct OfflinePlan {
  Trajectory trajectory;
  std::vector<double> headings;  // one per move, trajectory.points.size()-1
};

/// Per-step greedy minimization of the summed inverse-determinant
/// uncertainty over the action set, given the true target positions.
/// Candidate positions are clamped to the extent; ties (including all-infinite
/// scores) break to the lowest action index. The very first bearing move is
/// scored by the pairwise GDOP of the two positions instead.
OfflinePlan offline_fisher_plan(std::span<const Point2> targets,
                                const Point2& start, int horizon,
                                double step_size, const ActionSet& actions,
                                const MeasurementModel& model,
                                const Rect& extent);

/// One myopic step of the conditional-entropy baseline: estimates each
/// candidate's expected posterior entropy from `samples` hypothetical
/// measurements per target, drawn around the current MAP estimates with
/// noise shared across candidates, and returns the minimizing heading.
double greedy_local_step(const BeliefStack& stack, const Point2& p,
                         const ActionSet& actions, double step_size,
                         const MeasurementModel& model, int samples, Rng& rng);

}  // namespace actloc
