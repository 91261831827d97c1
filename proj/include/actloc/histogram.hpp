#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "actloc/geometry.hpp"

namespace actloc {

/// Every cell underflowed to zero likelihood; cannot renormalize.
struct NumericalDegeneracyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Axis-aligned environment rectangle.
struct Rect {
  Eigen::Vector2d lo{0.0, 0.0};
  Eigen::Vector2d hi{1.0, 1.0};

  static Rect square(double side) { return {{0.0, 0.0}, {side, side}}; }

  double width() const { return hi.x() - lo.x(); }
  double height() const { return hi.y() - lo.y(); }
  double diagonal() const { return (hi - lo).norm(); }
  bool empty() const { return !(width() > 0.0 && height() > 0.0); }
  bool contains(const Point2& p) const {
    return p.x() >= lo.x() && p.x() <= hi.x() && p.y() >= lo.y() &&
           p.y() <= hi.y();
  }
  Point2 clamp(const Point2& p) const {
    return {std::min(std::max(p.x(), lo.x()), hi.x()),
            std::min(std::max(p.y(), lo.y()), hi.y())};
  }
};

/// Noise-free measurement value from one sensor position to every cell
/// center. Computed once per position and shared across targets and
/// hypothetical observations; that is the hot path of the filter.
struct MeasurementGrid {
  Eigen::ArrayXXd values;  // (width, height), column-major: x fastest
  int sensor_ix = -1;      // cell containing the sensor, -1 if outside
  int sensor_iy = -1;
  SensorKind kind = SensorKind::Bearing;
  double sigma = 0.0;
};

/// Discretized likelihood of one target's position over the extent.
///
/// Cells hold accumulated log-likelihoods; 50 multiplications of small
/// Gaussian densities would underflow in linear space. The linear-space
/// invariant (max cell == 1 after every update) corresponds to a max
/// log-value of 0.
class GridHistogram {
 public:
  GridHistogram(int width, int height, const Rect& extent);

  /// Wraps raw log-likelihood accumulators without renormalizing.
  static GridHistogram from_log_values(const Rect& extent,
                                       Eigen::ArrayXXd log_values);

  int width() const { return width_; }
  int height() const { return height_; }
  const Rect& extent() const { return extent_; }
  double cell_width() const { return extent_.width() / width_; }
  double cell_height() const { return extent_.height() / height_; }

  Point2 cell_center(int ix, int iy) const {
    return {extent_.lo.x() + (ix + 0.5) * cell_width(),
            extent_.lo.y() + (iy + 0.5) * cell_height()};
  }

  double value(int ix, int iy) const { return std::exp(log_values_(ix, iy)); }
  double log_value(int ix, int iy) const { return log_values_(ix, iy); }
  const Eigen::ArrayXXd& log_values() const { return log_values_; }
  Eigen::ArrayXXd linear_values() const { return log_values_.exp(); }

  MeasurementGrid measurement_grid(const Point2& p,
                                   const MeasurementModel& model) const;

  /// One Bayesian update: multiply every cell by the measurement likelihood
  /// at its center, then rescale so the maximum cell is 1.
  void update(const Point2& p, const Measurement& z_hat,
              const MeasurementModel& model);
  void update_with_grid(const MeasurementGrid& grid, const Measurement& z_hat);

  /// Center of the maximum-likelihood cell; ties break to the row-major
  /// (y-outer) lowest cell index.
  Point2 predict_map() const;

  /// Shannon entropy in nats of the cells renormalized to sum 1.
  double entropy() const;

 private:
  int width_ = 0;
  int height_ = 0;
  Rect extent_;
  Eigen::ArrayXXd log_values_;  // (width, height)
};

GridHistogram init_uniform(int width, int height, const Rect& extent);

/// Gaussian density of observing z_hat if v were the true target position
/// for a sensor at p. Bearing residuals are wrapped; for coincident v and p
/// the bearing is undefined and the peak density is returned.
double point_likelihood(const Point2& v, const Point2& p,
                        const Measurement& z_hat,
                        const MeasurementModel& model);

/// Per-cell log-likelihood of z_hat_value given the precomputed grid. For
/// bearings the sensor's own cell receives the peak (residual-0) density.
Eigen::ArrayXXd log_likelihood_grid(const MeasurementGrid& grid,
                                    double z_hat_value);

/// Entropy of the distribution proportional to exp(log_weights).
double entropy_of_log_weights(const Eigen::ArrayXXd& log_weights);

/// One histogram per target, all sharing dimensions and extent.
struct BeliefStack {
  std::vector<GridHistogram> histograms;
};

/// Sum of the per-target histograms, normalized to [0, 1].
struct BeliefImage {
  int width = 0;
  int height = 0;
  Eigen::ArrayXXd pixels;  // (width, height)
};

BeliefImage aggregate_image(const BeliefStack& stack, int out_width,
                            int out_height);

BeliefImage resize_bilinear(const BeliefImage& img, int out_width,
                            int out_height);

}  // namespace actloc
