#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pixnav/nn/autograd.hpp"
#include "pixnav/policy/config.hpp"
#include "pixnav/policy/goal_mask.hpp"

namespace pixnav::policy {

// Network inputs for a batch of right-padded episodes.
template <typename T>
struct PolicyInput {
  std::vector<int> lengths;  // real steps per episode
  nn::Tensor<T> goal;        // [batch, 4, H, W]: first frame and goal mask
  nn::Tensor<T> frames;      // [sum(lengths), 3, H, W], episode-major

  int batch() const { return static_cast<int>(lengths.size()); }
  int max_len() const;
};

// Per-step targets laid out as [batch * max_len] rows.
template <typename T>
struct PolicyLabels {
  std::vector<int> actions;
  std::vector<T> step_weight;  // 1 on real steps, 0 on padding
  std::vector<T> visible;      // 1 where the goal pixel is in view
  nn::Tensor<T> distance;      // [rows, 1], remaining steps / 10
  nn::Tensor<T> pixel;         // [rows, 2], normalised to [0, 1]
};

template <typename T>
struct PolicyOutputs {
  int batch = 0;
  int max_len = 0;
  nn::Var<T> logits;    // [batch * max_len, 6]
  nn::Var<T> pixel;     // [batch * max_len, 2], null without the tracking head
  nn::Var<T> distance;  // [batch * max_len, 1], null without the distance head
};

template <typename T>
struct LossTerms {
  nn::Var<T> total;
  nn::Var<T> il;
  nn::Var<T> distance;
  nn::Var<T> track;
};

template <typename T>
struct NamedParam {
  std::string name;
  nn::Var<T> var;
};

template <typename T>
class PixNavPolicy {
 public:
  PixNavPolicy(PolicyConfig config, std::uint64_t seed);

  const PolicyConfig& config() const { return config_; }
  const std::vector<NamedParam<T>>& parameters() const { return params_; }
  std::size_t parameter_count() const;
  // Null when absent.
  nn::Var<T> parameter(const std::string& name) const;

  // [B, 4, H, W] -> [B, goal_token_dim]
  nn::Var<T> encode_goal(const nn::Var<T>& goal) const;
  // [N, 3, H, W] -> [N, obs_token_dim]
  nn::Var<T> encode_observations(const nn::Var<T>& frames) const;
  // Runs the decoder and heads over episode-major observation tokens.
  PolicyOutputs<T> decode(const nn::Var<T>& goal_tokens, const nn::Var<T>& obs_tokens,
                          std::span<const int> lengths) const;
  PolicyOutputs<T> forward(const PolicyInput<T>& input) const;

 private:
  struct Conv {
    nn::Var<T> w, b;
    int stride = 1, pad = 0;
  };
  struct Block {
    Conv conv1, conv2, shortcut;
    bool has_shortcut = false;
  };
  struct Encoder {
    Conv stem;
    bool maxpool = false;
    std::vector<Block> blocks;
    Pooling pooling = Pooling::Flatten;
    nn::Var<T> proj_w, proj_b;
  };
  struct Linear {
    nn::Var<T> w, b;
  };
  struct Norm {
    nn::Var<T> gamma, beta;
  };
  struct DecoderLayer {
    Norm ln1, ln2;
    Linear qkv, out, fc1, fc2;
  };

  nn::Var<T> add_param(const std::string& name, std::vector<int> shape);
  Encoder make_encoder(const std::string& prefix, const EncoderConfig& cfg, int in_channels, int token_dim);
  Linear make_linear(const std::string& prefix, int in, int out);
  Norm make_norm(const std::string& prefix, int dim);
  nn::Var<T> run_encoder(const Encoder& e, const nn::Var<T>& x) const;

  PolicyConfig config_;
  std::vector<NamedParam<T>> params_;
  Encoder goal_encoder_;
  Encoder obs_encoder_;
  Linear goal_fusion_;  // goal token -> fusion feature, or -> prefix token without fusion
  nn::Var<T> positions_;
  std::vector<DecoderLayer> layers_;
  Norm final_norm_;
  Linear action_head_, pixel_head_, distance_head_;
};

// Unweighted sum of the imitation, temporal-distance and tracking terms.
// Disabled heads contribute a constant zero.
template <typename T>
LossTerms<T> compute_loss(const PolicyOutputs<T>& out, const PolicyLabels<T>& labels, const PolicyConfig& config);

// RGB bytes (interleaved) -> planar [3, H, W] scaled to [-1, 1].
template <typename T>
void write_rgb_planes(std::span<const std::uint8_t> rgb, int width, int height, T* dst);
// First frame plus goal mask -> planar [4, H, W].
template <typename T>
void write_goal_planes(std::span<const std::uint8_t> rgb, const GoalMask& mask, T* dst);

struct StepPrediction {
  std::array<double, 6> logits{};
  double pixel_x = 0.0;  // normalised; 0 without the tracking head
  double pixel_y = 0.0;
  double distance = 0.0;  // remaining steps; 0 without the distance head
  int action() const;     // argmax, lowest index on ties
};

// Closed-loop inference: caches the goal token and per-frame observation
// tokens, re-running only the decoder as frames arrive.
template <typename T>
class PolicySession {
 public:
  PolicySession(const PixNavPolicy<T>& model, std::span<const std::uint8_t> first_rgb, int goal_x, int goal_y);
  StepPrediction step(std::span<const std::uint8_t> rgb);
  int steps() const { return static_cast<int>(obs_.size()); }

 private:
  const PixNavPolicy<T>* model_;
  nn::Tensor<T> goal_token_;
  std::vector<std::vector<T>> obs_;
};

}  // namespace pixnav::policy
