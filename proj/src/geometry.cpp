#include "actloc/geometry.hpp"

#include <cmath>
#include <numbers>

namespace actloc {

namespace {
constexpr double kPi = std::numbers::pi;
}

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // lands in [-pi, pi]
  return r <= -kPi ? r + 2.0 * kPi : r;
}

double bearing_to(const Point2& p, const Point2& q) {
  if (p.x() == q.x() && p.y() == q.y())
    throw DegenerateGeometryError("bearing undefined: sensor coincides with target");
  return wrap_angle(std::atan2(q.y() - p.y(), q.x() - p.x()));
}

double range_to(const Point2& p, const Point2& q) { return (q - p).norm(); }

double true_measurement(const MeasurementModel& model, const Point2& p,
                        const Point2& q) {
  return model.kind == SensorKind::Bearing ? bearing_to(p, q) : range_to(p, q);
}

Measurement sample_measurement(const MeasurementModel& model, const Point2& p,
                               const Point2& q, Rng& rng, int target_index) {
  const double noiseless = true_measurement(model, p, q);
  double value = noiseless + sample_gaussian(rng, model.sigma);
  if (model.kind == SensorKind::Bearing) value = wrap_angle(value);
  return Measurement{value, target_index};
}

}  // namespace actloc
