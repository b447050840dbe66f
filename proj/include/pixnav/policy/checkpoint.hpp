#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "pixnav/nn/tensor.hpp"
#include "pixnav/policy/model.hpp"

namespace pixnav::policy {

struct NamedTensor {
  std::string name;
  nn::Tensor<float> tensor;
};

// On disk: "PIXNAVCK", u32 version, u64 header length, JSON header
// (config, meta, tensor table, payload crc32), then float32 payload.
struct Checkpoint {
  PolicyConfig config;
  nlohmann::json meta = nlohmann::json::object();  // training step, rng state, ...
  std::vector<NamedTensor> parameters;
  std::vector<NamedTensor> extra;  // optimizer state

  const NamedTensor* find_extra(const std::string& name) const;
};

inline constexpr std::uint32_t kCheckpointVersion = 1;

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint load_checkpoint(const std::filesystem::path& path);

Checkpoint make_checkpoint(const PixNavPolicy<float>& model);
// Copies parameters into `model`; names and shapes must match exactly.
void load_parameters(PixNavPolicy<float>& model, const Checkpoint& ckpt);
PixNavPolicy<float> policy_from_checkpoint(const Checkpoint& ckpt);

}  // namespace pixnav::policy
