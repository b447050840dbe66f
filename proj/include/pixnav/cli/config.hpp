#pragma once

#include <filesystem>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace pixnav::cli {

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Reads the process environment.
std::optional<std::string> process_env(const std::string& name);

// Environment overrides for the top-level keys of `defaults`: key "batch_size"
// under prefix "PIXNAV_TRAIN" reads PIXNAV_TRAIN_BATCH_SIZE. Values parse as
// JSON when possible, else as strings.
nlohmann::json env_overrides(const nlohmann::json& defaults, const std::string& prefix, const EnvLookup& env);

// defaults <- file <- env <- flags, each layer a JSON merge patch. Keys absent
// from `defaults` in any layer raise ValidationError listing all of them.
nlohmann::json resolve_config(const nlohmann::json& defaults, const std::optional<std::filesystem::path>& file,
                              const std::string& env_prefix, const EnvLookup& env, const nlohmann::json& flags);

// Parses "k=v" overrides; dotted keys address nested objects.
nlohmann::json parse_set_overrides(const std::vector<std::string>& assignments);

struct RunDirectory {
  std::filesystem::path path;

  // Creates `path` (or runs/<command>-<UTC timestamp> when empty) and writes
  // run.json with the command line, resolved config and build versions.
  static RunDirectory create(const std::filesystem::path& path, const std::string& command,
                             const std::vector<std::string>& argv, const nlohmann::json& config);
  void write_json(const std::string& name, const nlohmann::json& value) const;
  void write_text(const std::string& name, const std::string& text) const;
};

nlohmann::json build_info();

}  // namespace pixnav::cli
