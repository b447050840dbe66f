#pragma once

#include <filesystem>
#include <functional>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "pixnav/datagen/dataset.hpp"
#include "pixnav/policy/checkpoint.hpp"
#include "pixnav/policy/model.hpp"

namespace pixnav::training {

struct Batch {
  policy::PolicyInput<float> input;
  policy::PolicyLabels<float> labels;
};

// Right-pads episodes to the longest one; rows are (episode, step).
Batch make_batch(const std::vector<const datagen::Episode*>& episodes, const policy::PolicyConfig& config,
                 int max_len = 64);
Batch make_batch(const std::vector<datagen::Episode>& episodes, const policy::PolicyConfig& config, int max_len = 64);

struct AdamConfig {
  double lr = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double clip_norm = 1.0;
  int warmup_steps = 100;
  int total_steps = 1000;  // cosine horizon
  double min_lr_ratio = 0.0;
};

// Linear warmup then cosine decay to min_lr_ratio * lr at total_steps.
double learning_rate(const AdamConfig& c, int step);

class Adam {
 public:
  Adam(std::vector<policy::NamedParam<float>> params, AdamConfig config);
  // Clips the global gradient norm, applies one update, zeroes gradients.
  // Returns the pre-clip norm.
  double step();
  int steps_taken() const { return t_; }
  void save_state(policy::Checkpoint& ckpt) const;
  void load_state(const policy::Checkpoint& ckpt);

 private:
  std::vector<policy::NamedParam<float>> params_;
  AdamConfig config_;
  std::vector<std::vector<float>> m_, v_;
  int t_ = 0;
};

struct TrainConfig {
  std::string dataset;
  policy::PolicyConfig policy = policy::preset_config("desk");
  int batch_size = 16;
  int steps = 6000;
  AdamConfig adam;
  std::uint64_t seed = 1;
  int max_len = 64;
  int limit_episodes = 0;  // use only the first N episodes (0: all)
  int log_every = 10;
  int checkpoint_every = 500;
  bool resume = true;  // continue from run_dir/checkpoint.bin when present

  void validate() const;
};

nlohmann::json to_json(const TrainConfig& c);
TrainConfig train_config_from_json(const nlohmann::json& j);

class TrainingError : public Error {
 public:
  using Error::Error;
};

struct TrainResult {
  std::filesystem::path checkpoint;
  int steps = 0;
  double first_loss = 0.0;
  double final_loss = 0.0;
};

// Episode order for one epoch: a seeded permutation of [0, n).
std::vector<int> epoch_order(int n, std::uint64_t seed, int epoch);

// Runs (or resumes) training, writing run_dir/metrics.jsonl and
// run_dir/checkpoint.bin. `on_log` sees every logged record.
TrainResult train(const TrainConfig& config, const std::filesystem::path& run_dir,
                  const std::function<void(const nlohmann::json&)>& on_log = {});

// Fraction of expert actions reproduced by the argmax policy under teacher
// forcing (the policy sees the expert's frames).
double action_accuracy(const policy::PixNavPolicy<float>& model, const std::vector<datagen::Episode>& episodes,
                       int batch_size = 16);

}  // namespace pixnav::training
