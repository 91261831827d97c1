#pragma once

#include <span>
#include <stdexcept>

#include "actloc/geometry.hpp"
#include "actloc/histogram.hpp"

namespace actloc {

/// Negative mean squared error between true and predicted target positions.
inline double reward_multimodal(std::span<const Point2> targets,
                                std::span<const Point2> predictions) {
  if (targets.size() != predictions.size() || targets.empty())
    throw std::invalid_argument("reward needs matching non-empty target lists");
  double sum = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i)
    sum += (targets[i] - predictions[i]).squaredNorm();
  return -sum / static_cast<double>(targets.size());
}

/// Negative mean pixel intensity of the belief image; in [-1, 0] for
/// normalized images and fully unsupervised.
inline double reward_image(const BeliefImage& img) {
  return -img.pixels.mean();
}

}  // namespace actloc
