#pragma once

#include <Eigen/Core>
#include <vector>

#include "actloc/rng.hpp"

namespace actloc {

/// Fully connected network with tanh hidden units and a linear output layer.
/// Forward/backward operate on column-per-sample batches.
class Mlp {
 public:
  Mlp() = default;

  /// Uniform(-1/sqrt(fan_in), 1/sqrt(fan_in)) weights and biases.
  static Mlp random(const std::vector<int>& layer_sizes, Rng& rng);
  static Mlp zeros(const std::vector<int>& layer_sizes);

  const std::vector<int>& layer_sizes() const { return sizes_; }
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }
  std::size_t parameter_count() const;

  std::vector<Eigen::MatrixXd> weights;  // weights[l]: (sizes[l+1], sizes[l])
  std::vector<Eigen::VectorXd> biases;

  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
  Eigen::MatrixXd forward(const Eigen::MatrixXd& batch) const;

  struct Cache {
    std::vector<Eigen::MatrixXd> activations;  // [0] = input, [l] post-tanh
  };
  Eigen::MatrixXd forward(const Eigen::MatrixXd& batch, Cache& cache) const;

  struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    static Gradients zeros_like(const Mlp& net);
  };

  /// Exact analytic backprop of the upstream gradient dL/dY; returns dL/dX.
  /// Gradients are summed over the batch (fold any 1/B into `upstream`).
  Eigen::MatrixXd backward(const Cache& cache,
                           const Eigen::MatrixXd& upstream,
                           Gradients& grads) const;

 private:
  explicit Mlp(std::vector<int> sizes);
  void check_input(Eigen::Index rows) const;
  std::vector<int> sizes_;
};

/// First/second moment accumulators for one parameter tensor.
struct AdamMoments {
  Eigen::ArrayXXd m;
  Eigen::ArrayXXd v;
};

/// One bias-corrected Adam update of a single tensor. `step` counts from 1.
template <typename Tensor>
void adam_update(Tensor& param, const Tensor& grad, AdamMoments& mom,
                 long step, double lr, double beta1 = 0.9,
                 double beta2 = 0.999, double eps = 1e-8) {
  if (mom.m.size() == 0) {
    mom.m = Eigen::ArrayXXd::Zero(param.rows(), param.cols());
    mom.v = Eigen::ArrayXXd::Zero(param.rows(), param.cols());
  }
  mom.m = beta1 * mom.m + (1.0 - beta1) * grad.array();
  mom.v = beta2 * mom.v + (1.0 - beta2) * grad.array().square();
  const double c1 = 1.0 - std::pow(beta1, static_cast<double>(step));
  const double c2 = 1.0 - std::pow(beta2, static_cast<double>(step));
  param.array() -= lr * (mom.m / c1) / ((mom.v / c2).sqrt() + eps);
}

struct AdamState {
  std::vector<AdamMoments> weights;
  std::vector<AdamMoments> biases;
  long step = 0;
  static AdamState zeros_like(const Mlp& net);
};

/// Adam over every tensor of the network with shared step counter.
void adam_step(Mlp& net, const Mlp::Gradients& grads, AdamState& state,
               double lr, double beta1 = 0.9, double beta2 = 0.999,
               double eps = 1e-8);

}  // namespace actloc
