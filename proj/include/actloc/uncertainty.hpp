#pragma once

#include <Eigen/Core>
#include <span>
#include <stdexcept>
#include <utility>

#include "actloc/geometry.hpp"

namespace actloc {

/// The Fisher information is singular: the inverse (and with it the
/// uncertainty ellipse) does not exist.
struct UnboundedUncertaintyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Accumulated 2x2 Fisher information about one target position.
/// Symmetric positive semidefinite by construction.
struct Fim2x2 {
  Eigen::Matrix2d m = Eigen::Matrix2d::Zero();

  double det() const { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
  double trace() const { return m(0, 0) + m(1, 1); }

  Fim2x2& operator+=(const Fim2x2& o) {
    m += o.m;
    return *this;
  }
  friend Fim2x2 operator+(Fim2x2 a, const Fim2x2& b) { return a += b; }
};

/// Information contributed by a single measurement of q taken from p:
/// (1/sigma^2) * grad_h * grad_h^T, with grad_phi = (-sin phi, cos phi)/d for
/// bearings and grad_d the sensor-target unit vector for ranges.
Fim2x2 fim_measurement(const Point2& p, const Point2& q,
                       const MeasurementModel& model);

/// Sum of per-measurement information over all sensor locations.
Fim2x2 fim_accumulate(std::span<const Point2> sensors, const Point2& q,
                      const MeasurementModel& model);

/// Pairwise closed form of det(F) for n bearing measurements:
/// (1/sigma^4) * sum_{i<j} sin^2(phi_i - phi_j) / (d_i^2 d_j^2).
double fim_det_bearing_closed_form(std::span<const Point2> sensors,
                                   const Point2& q, double sigma2);

/// A determinant this small relative to the trace is treated as singular;
/// it is below what the rank-1 outer-product sums can resolve in double.
bool fim_is_singular(const Fim2x2& f);

/// Semi-axis lengths of the Cramer-Rao uncertainty ellipse, i.e. sqrt of the
/// eigenvalues of F^-1, sorted descending. Throws if F is singular.
std::pair<double, double> uncertainty_ellipse_axes(const Fim2x2& f);

/// det(F^-1) = 1/det(F), or +infinity when F is singular.
double inverse_det_uncertainty(const Fim2x2& f);

/// Total uncertainty over all targets: sum_i 1/det(F_{q_i}). Returns the
/// +infinity sentinel as soon as any target is not triangulated.
double total_uncertainty(std::span<const Point2> sensors,
                         std::span<const Point2> targets,
                         const MeasurementModel& model);

/// Geometric dilution of precision d_i*d_j/|sin(phi_i - phi_j)| for one
/// sensor pair; +infinity when the bearings coincide mod pi.
double gdop(const Point2& p_i, const Point2& p_j, const Point2& q);

}  // namespace actloc
