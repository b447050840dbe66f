#pragma once

#include <array>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string_view>
#include <vector>

#include "pixnav/sim/geometry.hpp"
#include "pixnav/sim/world.hpp"

namespace pixnav::sim {

enum class ActionId : std::uint8_t {
  Stop = 0,
  MoveAhead = 1,
  TurnLeft = 2,
  TurnRight = 3,
  LookUp = 4,
  LookDown = 5,
};
inline constexpr int kNumActions = 6;

std::string_view to_string(ActionId a);
std::optional<ActionId> parse_action(std::string_view s);

struct Pose {
  double x = 0.0;
  double y = 0.0;
  int yaw_deg = 0;    // counter-clockwise from +x, normalized to [0, 360)
  int pitch_deg = 0;  // positive looks up

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const Pose&, const Pose&) = default;
};

struct Camera {
  double height = 0.88;
  double hfov_deg = 79.0;
  int width = 160;
  int height_px = 120;

  void validate() const;
  friend bool operator==(const Camera&, const Camera&) = default;
};

struct StepParams {
  double move_distance = 0.25;
  int turn_deg = 30;
  int look_deg = 30;
  int max_pitch_deg = 30;
};

// Applies one discrete action. Forward motion that would enter a blocked cell
// leaves the position unchanged.
Pose step(const World& world, const Pose& pose, ActionId action, const StepParams& params = {});

// True when the straight segment a->b stays inside free cells.
bool segment_free(const World& world, Vec2 a, Vec2 b);

int normalize_yaw(int deg);

nlohmann::json to_json(const Pose& p);
Pose pose_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Camera& c);
Camera camera_from_json(const nlohmann::json& j);

}  // namespace pixnav::sim
