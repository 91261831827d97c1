#include "actloc/planners.hpp"

#include <cmath>
#include <limits>

#include "actloc/uncertainty.hpp"

namespace actloc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

Point2 advance(const Point2& p, double heading, double step_size,
               const Rect& extent) {
  return extent.clamp(
      {p.x() + step_size * std::cos(heading),
       p.y() + step_size * std::sin(heading)});
}

bool on_any_target(const Point2& p, std::span<const Point2> targets) {
  for (const Point2& q : targets)
    if (p.x() == q.x() && p.y() == q.y()) return true;
  return false;
}
}  // namespace

OfflinePlan offline_fisher_plan(std::span<const Point2> targets,
                                const Point2& start, int horizon,
                                double step_size, const ActionSet& actions,
                                const MeasurementModel& model,
                                const Rect& extent) {
  if (horizon < 2)
    throw std::invalid_argument("offline plan needs a horizon of at least 2");
  if (targets.empty())
    throw std::invalid_argument("offline plan needs at least one target");
  if (on_any_target(start, targets))
    throw DegenerateGeometryError("planner start coincides with a target");

  const std::size_t m = targets.size();
  std::vector<Fim2x2> fims(m);
  for (std::size_t i = 0; i < m; ++i)
    fims[i] = fim_measurement(start, targets[i], model);

  OfflinePlan plan;
  plan.trajectory.points.reserve(horizon);
  plan.trajectory.points.push_back(start);
  plan.headings.reserve(horizon - 1);

  for (int t = 2; t <= horizon; ++t) {
    const Point2 cur = plan.trajectory.points.back();
    const bool first_move =
        model.kind == SensorKind::Bearing && plan.trajectory.points.size() == 1;

    int best_k = -1;
    double best_score = kInf;
    Point2 best_pos = cur;
    for (int k = 0; k < actions.count(); ++k) {
      const Point2 cand = advance(cur, actions.heading(k), step_size, extent);
      double score = 0.0;
      if (on_any_target(cand, targets)) {
        score = kInf;
      } else if (first_move) {
        // A single prior measurement cannot triangulate; rank the first move
        // by the pairwise GDOP of the two positions instead.
        for (const Point2& q : targets) {
          score += gdop(start, cand, q);
          if (score == kInf) break;
        }
      } else {
        for (std::size_t i = 0; i < m; ++i) {
          const double u = inverse_det_uncertainty(
              fims[i] + fim_measurement(cand, targets[i], model));
          if (u == kInf) {
            score = kInf;
            break;
          }
          score += u;
        }
      }
      if (best_k < 0 || score < best_score) {
        best_k = k;
        best_score = score;
        best_pos = cand;
      }
    }

    plan.trajectory.points.push_back(best_pos);
    plan.headings.push_back(actions.heading(best_k));
    for (std::size_t i = 0; i < m; ++i)
      fims[i] += fim_measurement(best_pos, targets[i], model);
  }
  return plan;
}

double greedy_local_step(const BeliefStack& stack, const Point2& p,
                         const ActionSet& actions, double step_size,
                         const MeasurementModel& model, int samples,
                         Rng& rng) {
  if (stack.histograms.empty())
    throw std::invalid_argument("greedy step needs an initialized belief");
  if (samples < 1)
    throw std::invalid_argument("greedy step needs at least one sample");

  const GridHistogram& first = stack.histograms.front();
  const std::size_t m = stack.histograms.size();

  std::vector<Point2> map_estimates(m);
  for (std::size_t i = 0; i < m; ++i)
    map_estimates[i] = stack.histograms[i].predict_map();

  // Common random numbers: one noise draw per (target, sample), shared by
  // every candidate so the comparison is deterministic given the seed.
  std::vector<double> noise(m * samples);
  for (double& e : noise) e = sample_gaussian(rng, model.sigma);

  int best_k = -1;
  double best_score = kInf;
  Eigen::ArrayXXd trial;
  for (int k = 0; k < actions.count(); ++k) {
    const Point2 cand =
        advance(p, actions.heading(k), step_size, first.extent());
    const MeasurementGrid grid = first.measurement_grid(cand, model);

    double score = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const Point2& q_hat = map_estimates[i];
      const bool coincident =
          cand.x() == q_hat.x() && cand.y() == q_hat.y();
      const double center = coincident ? 0.0 : true_measurement(model, cand, q_hat);
      double acc = 0.0;
      for (int s = 0; s < samples; ++s) {
        double z_hat = center + noise[i * samples + s];
        if (model.kind == SensorKind::Bearing) z_hat = wrap_angle(z_hat);
        trial = log_likelihood_grid(grid, z_hat);
        trial += stack.histograms[i].log_values();
        acc += entropy_of_log_weights(trial);
      }
      score += acc / samples;
    }
    if (best_k < 0 || score < best_score) {
      best_k = k;
      best_score = score;
    }
  }
  return actions.heading(best_k);
}

}  // namespace actloc
