#pragma once

#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pixnav/util/error.hpp"

namespace pixnav::nn {

// Dense row-major tensor. Shapes are small vectors of extents.
template <typename T>
struct Tensor {
  std::vector<int> shape;
  std::vector<T> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s, T fill = T(0)) : shape(std::move(s)), data(count(shape), fill) {}

  static std::size_t count(const std::vector<int>& s) {
    return std::accumulate(s.begin(), s.end(), std::size_t{1},
                           [](std::size_t a, int b) { return a * static_cast<std::size_t>(b); });
  }
  std::size_t size() const { return data.size(); }
  int rank() const { return static_cast<int>(shape.size()); }
  int dim(int i) const { return shape[static_cast<std::size_t>(i < 0 ? rank() + i : i)]; }
  // Product of all extents but the last.
  int rows() const { return rank() == 0 ? 1 : static_cast<int>(size() / static_cast<std::size_t>(dim(-1))); }
  int cols() const { return rank() == 0 ? 1 : dim(-1); }
  T* ptr() { return data.data(); }
  const T* ptr() const { return data.data(); }
  std::span<T> span() { return data; }
  std::span<const T> span() const { return data; }
  void fill(T v) { std::fill(data.begin(), data.end(), v); }
  bool same_shape(const Tensor& o) const { return shape == o.shape; }
};

std::string shape_string(const std::vector<int>& shape);

template <typename T>
void require_shape(const Tensor<T>& t, const std::vector<int>& shape, const char* what) {
  if (t.shape != shape)
    throw ValidationError(std::string(what) + ": expected shape " + shape_string(shape) + ", got " +
                          shape_string(t.shape));
}

}  // namespace pixnav::nn
