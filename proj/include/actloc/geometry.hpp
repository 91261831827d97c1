#pragma once

#include <Eigen/Core>
#include <stdexcept>

#include "actloc/rng.hpp"

namespace actloc {

template <typename Scalar>
using Point2T = Eigen::Matrix<Scalar, 2, 1>;

/// Planar position in environment units.
using Point2 = Point2T<double>;

/// Sensor and target coincide; bearings (and bearing gradients) are undefined.
struct DegenerateGeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SensorKind { Bearing, Range };

/// Relative sensor with zero-mean Gaussian noise of standard deviation
/// `sigma` (radians for bearing, meters for range).
struct MeasurementModel {
  SensorKind kind = SensorKind::Bearing;
  double sigma = 0.2;

  static MeasurementModel bearing(double sigma) {
    return validated({SensorKind::Bearing, sigma});
  }
  static MeasurementModel range(double sigma) {
    return validated({SensorKind::Range, sigma});
  }

  double variance() const { return sigma * sigma; }

 private:
  static MeasurementModel validated(MeasurementModel m) {
    if (!(m.sigma > 0.0))
      throw std::invalid_argument("measurement noise sigma must be > 0");
    return m;
  }
};

/// One noisy observation of target `target_index`. Bearing values lie in
/// (-pi, pi]; range values may go negative under noise and are kept as-is.
struct Measurement {
  double value = 0.0;
  int target_index = 0;
};

/// Maps any finite angle into (-pi, pi], congruent mod 2*pi.
double wrap_angle(double a);

/// Full-quadrant bearing from p to q in (-pi, pi]. Throws on p == q.
double bearing_to(const Point2& p, const Point2& q);

/// Euclidean distance.
double range_to(const Point2& p, const Point2& q);

/// Noise-free measurement value for the model's modality.
double true_measurement(const MeasurementModel& model, const Point2& p,
                        const Point2& q);

Measurement sample_measurement(const MeasurementModel& model, const Point2& p,
                               const Point2& q, Rng& rng,
                               int target_index = 0);

}  // namespace actloc
