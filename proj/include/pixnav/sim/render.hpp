#pragma once

#include <cstdint>
#include <vector>

#include "pixnav/sim/agent.hpp"
#include "pixnav/sim/geometry.hpp"
#include "pixnav/sim/world.hpp"

namespace pixnav::sim {

// One rendered observation. `depth` is the Euclidean ray length in meters and
// `semantic` the id of the first surface hit (see kSem* / kObjectIdBase);
// both are privileged and never shown to the policy.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;  // row-major, 3 bytes per pixel
  std::vector<float> depth;
  std::vector<std::int32_t> semantic;

  std::size_t pixel_index(int x, int y) const { return static_cast<std::size_t>(y) * width + x; }
  float depth_at(int x, int y) const { return depth[pixel_index(x, y)]; }
  std::int32_t semantic_at(int x, int y) const { return semantic[pixel_index(x, y)]; }
  friend bool operator==(const Frame&, const Frame&) = default;
};

struct RayHit {
  double distance = 0.0;
  std::int32_t semantic = kSemNone;
  Vec3 point;
  int face = 0;  // 0: floor/ceiling/top, 1: x-facing side, 2: y-facing side
  CellIndex cell;
};

struct CameraBasis {
  Vec3 origin;
  Vec3 forward;
  Vec3 right;
  Vec3 up;
  double tan_half_h = 0.0;
  double tan_half_v = 0.0;
};

CameraBasis camera_basis(const Pose& pose, const Camera& camera);

// Unit ray through the centre of pixel (px, py).
Vec3 pixel_ray(const CameraBasis& basis, const Camera& camera, double px, double py);

RayHit cast_ray(const World& world, Vec3 origin, Vec3 dir);

// Row-parallel renderer.
Frame render(const World& world, const Pose& pose, const Camera& camera);
// Serial reference renderer; must match `render` byte for byte.
Frame render_reference(const World& world, const Pose& pose, const Camera& camera);

struct Projection {
  double px = 0.0;  // continuous image coordinates, pixel i spans [i, i+1)
  double py = 0.0;
  bool visible = false;
  int ix() const { return static_cast<int>(px); }
  int iy() const { return static_cast<int>(py); }
};

// Perspective projection with a depth test against the world. Coordinates are
// clamped into the image when the point is not visible.
Projection project_point(const World& world, const Pose& pose, const Camera& camera, Vec3 point);

struct PixelTarget {
  Vec3 surface;     // 3-D point seen through the pixel
  Vec3 navigable;   // floor point the agent should walk to
  bool on_floor = false;
};

// Inverse projection through the privileged depth. Floor hits map to the hit
// itself; other surfaces snap to the nearest free cell in front of them.
PixelTarget pixel_to_point(const World& world, const Frame& frame, const Pose& pose,
                           const Camera& camera, int px, int py);

}  // namespace pixnav::sim
