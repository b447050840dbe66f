#pragma once

// Minimal reverse-mode autodiff over Tensor<T>. Ops executed while a
// GradScope is active (and with at least one input requiring gradients) are
// recorded on that scope's tape; Tape::backward replays them in reverse.
// Outside a scope ops run in inference mode and keep no history.

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pixnav/nn/tensor.hpp"

namespace pixnav::nn {

template <typename T>
struct Node {
  Tensor<T> value;
  Tensor<T> grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> inputs;
  std::function<void(Node&)> backward;

  Tensor<T>& ensure_grad() {
    if (grad.size() != value.size() || grad.shape != value.shape) grad = Tensor<T>(value.shape);
    return grad;
  }
};

template <typename T>
using Var = std::shared_ptr<Node<T>>;

template <typename T>
Var<T> constant(Tensor<T> value) {
  auto n = std::make_shared<Node<T>>();
  n->value = std::move(value);
  return n;
}

template <typename T>
Var<T> parameter(Tensor<T> value) {
  auto n = constant(std::move(value));
  n->requires_grad = true;
  return n;
}

template <typename T>
class Tape {
 public:
  void record(Var<T> v) { nodes_.push_back(std::move(v)); }
  // Seeds d(loss)/d(loss) = 1 and propagates to every recorded input.
  void backward(const Var<T>& loss);
  std::size_t size() const { return nodes_.size(); }
  void clear() { nodes_.clear(); }

 private:
  std::vector<Var<T>> nodes_;
};

template <typename T>
class GradScope {
 public:
  explicit GradScope(Tape<T>& tape) : previous_(active_) { active_ = &tape; }
  ~GradScope() { active_ = previous_; }
  GradScope(const GradScope&) = delete;
  GradScope& operator=(const GradScope&) = delete;
  static Tape<T>* active() { return active_; }

 private:
  Tape<T>* previous_;
  static thread_local Tape<T>* active_;
};

template <typename T>
thread_local Tape<T>* GradScope<T>::active_ = nullptr;

namespace ops {

// y = x W^T + b, x: [N, in], W: [out, in], b: [out] (optional).
template <typename T>
Var<T> linear(const Var<T>& x, const Var<T>& w, const Var<T>& b);

// x: [N, C, H, W], w: [Co, C, k, k], b: [Co] (optional).
template <typename T>
Var<T> conv2d(const Var<T>& x, const Var<T>& w, const Var<T>& b, int stride, int pad);

template <typename T>
Var<T> max_pool2d(const Var<T>& x, int kernel, int stride, int pad);

// [N, C, H, W] -> [N, C]
template <typename T>
Var<T> global_avg_pool(const Var<T>& x);

template <typename T>
Var<T> reshape(const Var<T>& x, std::vector<int> shape);

template <typename T>
Var<T> relu(const Var<T>& x);
template <typename T>
Var<T> gelu(const Var<T>& x);
template <typename T>
Var<T> sigmoid(const Var<T>& x);

template <typename T>
Var<T> add(const Var<T>& a, const Var<T>& b);

// Normalises each row of [N, D].
template <typename T>
Var<T> layer_norm(const Var<T>& x, const Var<T>& gamma, const Var<T>& beta, T eps = T(1e-5));

// [N, Da] ++ [N, Db] -> [N, Da + Db]
template <typename T>
Var<T> concat_cols(const Var<T>& a, const Var<T>& b);

// out[i] = x[index[i]] (a zero row where index[i] < 0). x: [M, D] -> [N, D].
template <typename T>
Var<T> gather_rows(const Var<T>& x, std::vector<int> index);

// Multi-head causal self-attention core. qkv: [batch * seq, 3 * D], rows
// ordered (batch, position); returns [batch * seq, D].
template <typename T>
Var<T> causal_attention(const Var<T>& qkv, int batch, int seq, int heads);

// Weighted mean cross-entropy over rows; rows with weight 0 are ignored.
template <typename T>
Var<T> cross_entropy(const Var<T>& logits, std::span<const int> targets, std::span<const T> weights);

// Weighted mean of squared errors, averaged over columns and weighted rows.
template <typename T>
Var<T> mse(const Var<T>& pred, const Tensor<T>& target, std::span<const T> weights);

// Sum of scalar vars.
template <typename T>
Var<T> sum_scalars(const std::vector<Var<T>>& terms);

}  // namespace ops

}  // namespace pixnav::nn
