#include "actloc/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace actloc {

Mlp::Mlp(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2)
    throw std::invalid_argument("network needs input and output layers");
  for (int s : sizes_)
    if (s < 1) throw std::invalid_argument("layer sizes must be positive");
  const std::size_t layers = sizes_.size() - 1;
  weights.resize(layers);
  biases.resize(layers);
  for (std::size_t l = 0; l < layers; ++l) {
    weights[l] = Eigen::MatrixXd::Zero(sizes_[l + 1], sizes_[l]);
    biases[l] = Eigen::VectorXd::Zero(sizes_[l + 1]);
  }
}

Mlp Mlp::zeros(const std::vector<int>& layer_sizes) {
  return Mlp(layer_sizes);
}

Mlp Mlp::random(const std::vector<int>& layer_sizes, Rng& rng) {
  Mlp net(layer_sizes);
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(layer_sizes[l]));
    Eigen::MatrixXd& w = net.weights[l];
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j)
        w(i, j) = sample_uniform(rng, -bound, bound);
    Eigen::VectorXd& b = net.biases[l];
    for (Eigen::Index i = 0; i < b.size(); ++i)
      b(i) = sample_uniform(rng, -bound, bound);
  }
  return net;
}

std::size_t Mlp::parameter_count() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < weights.size(); ++l)
    n += static_cast<std::size_t>(weights[l].size() + biases[l].size());
  return n;
}

void Mlp::check_input(Eigen::Index rows) const {
  if (rows != input_size())
    throw std::invalid_argument("input dimension does not match the network");
}

Eigen::VectorXd Mlp::forward(const Eigen::VectorXd& x) const {
  return forward(Eigen::MatrixXd(x)).col(0);
}

Eigen::MatrixXd Mlp::forward(const Eigen::MatrixXd& batch) const {
  check_input(batch.rows());
  Eigen::MatrixXd a = batch;
  for (std::size_t l = 0; l < weights.size(); ++l) {
    Eigen::MatrixXd z = (weights[l] * a).colwise() + biases[l];
    a = (l + 1 < weights.size()) ? z.array().tanh().matrix() : std::move(z);
  }
  return a;
}

Eigen::MatrixXd Mlp::forward(const Eigen::MatrixXd& batch,
                             Cache& cache) const {
  check_input(batch.rows());
  cache.activations.assign(1, batch);
  cache.activations.reserve(weights.size() + 1);
  for (std::size_t l = 0; l < weights.size(); ++l) {
    Eigen::MatrixXd z =
        (weights[l] * cache.activations.back()).colwise() + biases[l];
    if (l + 1 < weights.size()) z = z.array().tanh();
    cache.activations.push_back(std::move(z));
  }
  return cache.activations.back();
}

Mlp::Gradients Mlp::Gradients::zeros_like(const Mlp& net) {
  Gradients g;
  g.weights.reserve(net.weights.size());
  g.biases.reserve(net.biases.size());
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    g.weights.push_back(
        Eigen::MatrixXd::Zero(net.weights[l].rows(), net.weights[l].cols()));
    g.biases.push_back(Eigen::VectorXd::Zero(net.biases[l].size()));
  }
  return g;
}

Eigen::MatrixXd Mlp::backward(const Cache& cache,
                              const Eigen::MatrixXd& upstream,
                              Gradients& grads) const {
  if (cache.activations.size() != weights.size() + 1)
    throw std::invalid_argument("backward without a matching forward cache");
  if (upstream.rows() != output_size())
    throw std::invalid_argument("upstream gradient dimension mismatch");
  grads.weights.resize(weights.size());
  grads.biases.resize(weights.size());

  Eigen::MatrixXd dz = upstream;  // output layer is linear
  for (int l = static_cast<int>(weights.size()) - 1; l >= 0; --l) {
    grads.weights[l].noalias() = dz * cache.activations[l].transpose();
    grads.biases[l] = dz.rowwise().sum();
    Eigen::MatrixXd da = weights[l].transpose() * dz;
    if (l == 0) return da;
    dz = da.array() * (1.0 - cache.activations[l].array().square());
  }
  return {};  // unreachable
}

AdamState AdamState::zeros_like(const Mlp& net) {
  AdamState s;
  s.weights.resize(net.weights.size());
  s.biases.resize(net.biases.size());
  return s;
}

void adam_step(Mlp& net, const Mlp::Gradients& grads, AdamState& state,
               double lr, double beta1, double beta2, double eps) {
  ++state.step;
  for (std::size_t l = 0; l < net.weights.size(); ++l) {
    adam_update(net.weights[l], grads.weights[l], state.weights[l], state.step,
                lr, beta1, beta2, eps);
    adam_update(net.biases[l], grads.biases[l], state.biases[l], state.step,
                lr, beta1, beta2, eps);
  }
}

}  // namespace actloc
