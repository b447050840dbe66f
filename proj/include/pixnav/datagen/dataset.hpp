#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <vector>

#include "pixnav/datagen/episode.hpp"
#include "pixnav/sim/world.hpp"

namespace pixnav::datagen {

// Dataset directory layout:
//   manifest.json        format, version, counts, camera, seeds, episode table
//   shard-NNNNN.bin      concatenated episode records
// Episode record:
//   "PNEP" | u32 version | u32 label-json bytes | label json
//   | u32 frame count | per frame: u32 png bytes, png
// The manifest stores each record's shard, offset, size and crc32.
inline constexpr int kDatasetVersion = 1;

struct EpisodeEntry {
  int shard = 0;
  std::uint64_t offset = 0;
  std::uint64_t size = 0;
  std::uint32_t crc32 = 0;
  int length = 0;
  double geodesic = 0.0;
};

std::vector<std::uint8_t> encode_episode(const Episode& e);
Episode decode_episode(std::span<const std::uint8_t> record);

class DatasetWriter {
 public:
  // `meta` is merged into the manifest (camera, seeds, generator settings).
  DatasetWriter(std::filesystem::path dir, nlohmann::json meta = nlohmann::json::object(),
                int episodes_per_shard = 1000);
  void append(const Episode& e);
  // Writes manifest.json; returns it.
  nlohmann::json finish();

 private:
  void open_shard();
  std::filesystem::path dir_;
  nlohmann::json meta_;
  int per_shard_;
  int shard_ = -1;
  std::uint64_t shard_bytes_ = 0;
  int in_shard_ = 0;
  std::ofstream out_;
  std::vector<EpisodeEntry> entries_;
  bool finished_ = false;
};

class DatasetReader {
 public:
  explicit DatasetReader(std::filesystem::path dir);
  int size() const { return static_cast<int>(entries_.size()); }
  const EpisodeEntry& entry(int i) const { return entries_.at(static_cast<std::size_t>(i)); }
  const nlohmann::json& manifest() const { return manifest_; }
  // Reads and checksum-verifies one record.
  Episode load(int i) const;

 private:
  std::filesystem::path dir_;
  nlohmann::json manifest_;
  std::vector<EpisodeEntry> entries_;
};

void write_dataset(const std::vector<Episode>& episodes, const std::filesystem::path& dir,
                   const nlohmann::json& meta = nlohmann::json::object());
std::vector<Episode> read_dataset(const std::filesystem::path& dir);

struct DatagenConfig {
  int episodes = 10000;
  std::uint64_t seed = 1;           // episode streams
  std::uint64_t first_world_seed = 1000;
  int world_count = 40;
  sim::WorldSpec world;
  sim::Camera camera;
  EpisodeParams episode;
  int episodes_per_shard = 1000;
  int max_attempts_per_episode = 50;
  int jobs = 0;  // 0: OpenMP default
};

struct DatagenSummary {
  int episodes = 0;
  int skipped = 0;
  double mean_length = 0.0;
  double fraction_geodesic_ge_3m = 0.0;
};

// Episode i uses world first_world_seed + (i mod world_count) and the rng
// stream (seed, i, attempt); output is independent of the job count.
DatagenSummary generate_dataset(const DatagenConfig& config, const std::filesystem::path& dir);

nlohmann::json to_json(const DatagenConfig& c);
// Missing keys keep their defaults; unknown keys are rejected.
DatagenConfig datagen_config_from_json(const nlohmann::json& j);

}  // namespace pixnav::datagen
