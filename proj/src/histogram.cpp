#include "actloc/histogram.hpp"

#include <cmath>
#include <numbers>

namespace actloc {

namespace {

constexpr double kPi = std::numbers::pi;

double log_peak(double sigma) {
  return -0.5 * std::log(2.0 * kPi * sigma * sigma);
}

}  // namespace

GridHistogram::GridHistogram(int width, int height, const Rect& extent)
    : width_(width), height_(height), extent_(extent) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("histogram needs at least one cell per axis");
  if (extent.empty()) throw std::invalid_argument("histogram extent is empty");
  log_values_ = Eigen::ArrayXXd::Zero(width, height);
}

GridHistogram GridHistogram::from_log_values(const Rect& extent,
                                             Eigen::ArrayXXd log_values) {
  GridHistogram h(static_cast<int>(log_values.rows()),
                  static_cast<int>(log_values.cols()), extent);
  h.log_values_ = std::move(log_values);
  return h;
}

GridHistogram init_uniform(int width, int height, const Rect& extent) {
  return GridHistogram(width, height, extent);
}

MeasurementGrid GridHistogram::measurement_grid(
    const Point2& p, const MeasurementModel& model) const {
  MeasurementGrid grid;
  grid.kind = model.kind;
  grid.sigma = model.sigma;
  grid.values.resize(width_, height_);

  if (extent_.contains(p)) {
    grid.sensor_ix = std::min(
        static_cast<int>((p.x() - extent_.lo.x()) / cell_width()), width_ - 1);
    grid.sensor_iy =
        std::min(static_cast<int>((p.y() - extent_.lo.y()) / cell_height()),
                 height_ - 1);
  }

  const double cw = cell_width();
  const double ch = cell_height();
  const double x0 = extent_.lo.x() + 0.5 * cw;
  const double y0 = extent_.lo.y() + 0.5 * ch;
  double* out = grid.values.data();
  if (model.kind == SensorKind::Bearing) {
    for (int iy = 0; iy < height_; ++iy) {
      const double dy = y0 + iy * ch - p.y();
      for (int ix = 0; ix < width_; ++ix) {
        const double dx = x0 + ix * cw - p.x();
        // The sensor's own cell may put dx == dy == 0; atan2(0,0) == 0 is a
        // harmless placeholder, the likelihood pass overrides that cell.
        *out++ = std::atan2(dy, dx);
      }
    }
  } else {
    for (int iy = 0; iy < height_; ++iy) {
      const double dy = y0 + iy * ch - p.y();
      for (int ix = 0; ix < width_; ++ix) {
        const double dx = x0 + ix * cw - p.x();
        *out++ = std::sqrt(dx * dx + dy * dy);
      }
    }
  }
  return grid;
}

Eigen::ArrayXXd log_likelihood_grid(const MeasurementGrid& grid,
                                    double z_hat_value) {
  const double c0 = log_peak(grid.sigma);
  const double inv2s2 = 0.5 / (grid.sigma * grid.sigma);
  Eigen::ArrayXXd out(grid.values.rows(), grid.values.cols());
  const double* z = grid.values.data();
  double* o = out.data();
  const Eigen::Index n = grid.values.size();
  if (grid.kind == SensorKind::Bearing) {
    for (Eigen::Index i = 0; i < n; ++i) {
      // Wrapped residual; z and z_hat are both in (-pi, pi].
      double r = z[i] - z_hat_value;
      if (r > kPi)
        r -= 2.0 * kPi;
      else if (r <= -kPi)
        r += 2.0 * kPi;
      o[i] = c0 - r * r * inv2s2;
    }
    if (grid.sensor_ix >= 0)
      out(grid.sensor_ix, grid.sensor_iy) = c0;  // bearing undefined there
  } else {
    for (Eigen::Index i = 0; i < n; ++i) {
      const double r = z[i] - z_hat_value;
      o[i] = c0 - r * r * inv2s2;
    }
  }
  return out;
}

void GridHistogram::update_with_grid(const MeasurementGrid& grid,
                                     const Measurement& z_hat) {
  log_values_ += log_likelihood_grid(grid, z_hat.value);
  const double max_log = log_values_.maxCoeff();
  if (!std::isfinite(max_log))
    throw NumericalDegeneracyError("histogram update left no finite cell");
  log_values_ -= max_log;
}

void GridHistogram::update(const Point2& p, const Measurement& z_hat,
                           const MeasurementModel& model) {
  update_with_grid(measurement_grid(p, model), z_hat);
}

Point2 GridHistogram::predict_map() const {
  int best_ix = 0;
  int best_iy = 0;
  double best = log_values_(0, 0);
  for (int iy = 0; iy < height_; ++iy) {
    for (int ix = 0; ix < width_; ++ix) {
      const double v = log_values_(ix, iy);
      if (v > best) {
        best = v;
        best_ix = ix;
        best_iy = iy;
      }
    }
  }
  return cell_center(best_ix, best_iy);
}

double entropy_of_log_weights(const Eigen::ArrayXXd& log_weights) {
  const double shift = log_weights.maxCoeff();
  const Eigen::ArrayXXd centered = log_weights - shift;
  const Eigen::ArrayXXd w = centered.exp();
  const double s1 = w.sum();
  const double s2 = (w * centered).sum();
  return std::log(s1) - s2 / s1;
}

double GridHistogram::entropy() const {
  return entropy_of_log_weights(log_values_);
}

double point_likelihood(const Point2& v, const Point2& p,
                        const Measurement& z_hat,
                        const MeasurementModel& model) {
  double residual;
  if (model.kind == SensorKind::Bearing) {
    residual = (v.x() == p.x() && v.y() == p.y())
                   ? 0.0
                   : wrap_angle(bearing_to(p, v) - z_hat.value);
  } else {
    residual = range_to(p, v) - z_hat.value;
  }
  const double s2 = model.variance();
  return std::exp(-0.5 * residual * residual / s2) / std::sqrt(2.0 * kPi * s2);
}

BeliefImage aggregate_image(const BeliefStack& stack, int out_width,
                            int out_height) {
  if (stack.histograms.empty())
    throw std::invalid_argument("aggregate_image: empty belief stack");
  const GridHistogram& first = stack.histograms.front();
  Eigen::ArrayXXd sum =
      Eigen::ArrayXXd::Zero(first.width(), first.height());
  for (const GridHistogram& h : stack.histograms) {
    if (h.width() != first.width() || h.height() != first.height())
      throw std::invalid_argument("aggregate_image: mismatched histograms");
    sum += h.linear_values();
  }
  sum /= sum.maxCoeff();

  BeliefImage img{first.width(), first.height(), std::move(sum)};
  if (out_width == img.width && out_height == img.height) return img;
  return resize_bilinear(img, out_width, out_height);
}

BeliefImage resize_bilinear(const BeliefImage& img, int out_width,
                            int out_height) {
  if (out_width < 1 || out_height < 1)
    throw std::invalid_argument("resize_bilinear: empty output");
  BeliefImage out{out_width, out_height,
                  Eigen::ArrayXXd(out_width, out_height)};
  const double sx = static_cast<double>(img.width) / out_width;
  const double sy = static_cast<double>(img.height) / out_height;
  for (int v = 0; v < out_height; ++v) {
    const double fy =
        std::min(std::max((v + 0.5) * sy - 0.5, 0.0), img.height - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, img.height - 1);
    const double wy = fy - y0;
    for (int u = 0; u < out_width; ++u) {
      const double fx =
          std::min(std::max((u + 0.5) * sx - 0.5, 0.0), img.width - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, img.width - 1);
      const double wx = fx - x0;
      out.pixels(u, v) =
          (1.0 - wy) * ((1.0 - wx) * img.pixels(x0, y0) +
                        wx * img.pixels(x1, y0)) +
          wy * ((1.0 - wx) * img.pixels(x0, y1) + wx * img.pixels(x1, y1));
    }
  }
  return out;
}

}  // namespace actloc
