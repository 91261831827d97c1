#include "actloc/uncertainty.hpp"

#include <cmath>
#include <limits>

namespace actloc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSingularDetRatio = 1e-12;
}  // namespace

Fim2x2 fim_measurement(const Point2& p, const Point2& q,
                       const MeasurementModel& model) {
  const Point2 diff = q - p;
  const double d2 = diff.squaredNorm();
  if (d2 == 0.0)
    throw DegenerateGeometryError("Fisher information undefined: sensor on target");

  Eigen::Vector2d grad;
  if (model.kind == SensorKind::Bearing) {
    // grad phi = (-sin phi, cos phi)/d = (-dy, dx)/d^2
    grad << -diff.y() / d2, diff.x() / d2;
  } else {
    grad = diff / std::sqrt(d2);
  }
  Fim2x2 f;
  f.m = (grad * grad.transpose()) / model.variance();
  return f;
}

Fim2x2 fim_accumulate(std::span<const Point2> sensors, const Point2& q,
                      const MeasurementModel& model) {
  Fim2x2 f;
  for (const Point2& p : sensors) f += fim_measurement(p, q, model);
  return f;
}

double fim_det_bearing_closed_form(std::span<const Point2> sensors,
                                   const Point2& q, double sigma2) {
  double sum = 0.0;
  for (std::size_t i = 0; i < sensors.size(); ++i) {
    const double phi_i = bearing_to(sensors[i], q);
    const double di2 = (q - sensors[i]).squaredNorm();
    for (std::size_t j = i + 1; j < sensors.size(); ++j) {
      const double phi_j = bearing_to(sensors[j], q);
      const double dj2 = (q - sensors[j]).squaredNorm();
      const double s = std::sin(phi_i - phi_j);
      sum += s * s / (di2 * dj2);
    }
  }
  return sum / (sigma2 * sigma2);
}

bool fim_is_singular(const Fim2x2& f) {
  const double tr = f.trace();
  if (!(tr > 0.0)) return true;
  const double scale = 0.25 * tr * tr;  // upper bound of det for PSD 2x2
  return f.det() <= kSingularDetRatio * scale;
}

std::pair<double, double> uncertainty_ellipse_axes(const Fim2x2& f) {
  if (fim_is_singular(f))
    throw UnboundedUncertaintyError("singular Fisher information");
  // Closed-form eigenvalues of the symmetric 2x2.
  const double tr = f.trace();
  const double det = f.det();
  const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
  const double lambda_max = 0.5 * (tr + disc);
  const double lambda_min = 0.5 * (tr - disc);
  // Eigenvalues of F^-1 are the reciprocals.
  return {1.0 / std::sqrt(lambda_min), 1.0 / std::sqrt(lambda_max)};
}

double inverse_det_uncertainty(const Fim2x2& f) {
  if (fim_is_singular(f)) return kInf;
  return 1.0 / f.det();
}

double total_uncertainty(std::span<const Point2> sensors,
                         std::span<const Point2> targets,
                         const MeasurementModel& model) {
  double total = 0.0;
  for (const Point2& q : targets) {
    const double u = inverse_det_uncertainty(fim_accumulate(sensors, q, model));
    if (u == kInf) return kInf;
    total += u;
  }
  return total;
}

double gdop(const Point2& p_i, const Point2& p_j, const Point2& q) {
  const double s = std::sin(bearing_to(p_i, q) - bearing_to(p_j, q));
  if (s == 0.0) return kInf;
  return range_to(p_i, q) * range_to(p_j, q) / std::abs(s);
}

}  // namespace actloc
