#pragma once

#include <vector>

namespace mgeo {

/// Dense rank-4 array indexed (a, b, c, d), each index in [0, dim).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int dim) : dim_(dim), data_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {}

  int dim() const { return dim_; }
  double& operator()(int a, int b, int c, int d) { return data_[index(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const { return data_[index(a, b, c, d)]; }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t index(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * dim_ + b) * dim_ + c) * dim_ + d;
  }

  int dim_ = 0;
  std::vector<double> data_;
};

}  // namespace mgeo
