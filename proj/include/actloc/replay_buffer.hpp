#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <vector>

#include "actloc/rng.hpp"

namespace actloc {

/// One (s, a, s', r, y) interaction; `terminal` is the episode-end label y.
struct Transition {
  Eigen::VectorXd state;
  double action = 0.0;  // heading in [0, 2*pi)
  Eigen::VectorXd next_state;
  double reward = 0.0;
  bool terminal = false;
};

/// Fixed-capacity FIFO transition store with uniform sampling.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(std::size_t capacity) : capacity_(capacity) {
    if (capacity == 0) throw std::invalid_argument("buffer capacity must be > 0");
    data_.reserve(std::min<std::size_t>(capacity, 1 << 16));
  }

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return data_.size(); }

  void push(Transition t) {
    if (data_.size() < capacity_) {
      data_.push_back(std::move(t));
    } else {
      data_[next_] = std::move(t);
      next_ = (next_ + 1) % capacity_;
    }
  }

  const Transition& operator[](std::size_t i) const { return data_[i]; }

  std::vector<std::size_t> sample_indices(std::size_t count, Rng& rng) const {
    if (data_.empty()) throw std::logic_error("sampling from an empty buffer");
    std::vector<std::size_t> idx(count);
    std::uniform_int_distribution<std::size_t> pick(0, data_.size() - 1);
    for (std::size_t& i : idx) i = pick(rng);
    return idx;
  }

 private:
  std::size_t capacity_;
  std::size_t next_ = 0;
  std::vector<Transition> data_;
};

}  // namespace actloc
