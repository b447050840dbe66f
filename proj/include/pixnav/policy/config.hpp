#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace pixnav::policy {

enum class Pooling { Flatten, GlobalAverage };

// Residual convolutional encoder (ResNet basic blocks, no normalisation).
struct EncoderConfig {
  int stem_channels = 16;
  int stem_kernel = 4;
  int stem_stride = 4;
  bool stem_maxpool = false;  // 3x3 stride-2 pool after the stem
  std::vector<int> stage_channels{16, 32, 32};
  std::vector<int> stage_strides{1, 2, 2};
  int blocks_per_stage = 1;
  Pooling pooling = Pooling::Flatten;

  friend bool operator==(const EncoderConfig&, const EncoderConfig&) = default;
};

struct PolicyConfig {
  std::string preset = "desk";
  int image_width = 160;
  int image_height = 120;
  int goal_mask_delta = 2;
  EncoderConfig goal_encoder;
  EncoderConfig obs_encoder;
  int goal_token_dim = 192;
  int obs_token_dim = 128;
  int fusion_dim = 64;
  int decoder_layers = 4;
  int heads = 4;
  int mlp_dim = 768;
  int max_seq = 64;
  bool use_tracking_head = true;
  bool use_distance_head = true;
  bool use_goal_fusion = true;
  // Supervise the clamped pixel on steps where the goal is out of view.
  bool track_invisible = false;

  int model_dim() const { return use_goal_fusion ? obs_token_dim + fusion_dim : obs_token_dim; }
  void validate() const;
  friend bool operator==(const PolicyConfig&, const PolicyConfig&) = default;
};

// "desk" (under 5M parameters), "paper" (ResNet18 encoders, printed token
// sizes) and "tiny" (gradient checks; 16x12 images, 8-d tokens).
PolicyConfig preset_config(const std::string& name);

nlohmann::json to_json(const PolicyConfig& c);
// Unknown keys are rejected; missing keys keep the preset's defaults.
PolicyConfig policy_config_from_json(const nlohmann::json& j);

}  // namespace pixnav::policy
