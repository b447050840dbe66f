#pragma once

#include <cstdint>
#include <vector>

#include "pixnav/sim/agent.hpp"
#include "pixnav/sim/navigation.hpp"
#include "pixnav/sim/render.hpp"
#include "pixnav/util/error.hpp"
#include "pixnav/util/rng.hpp"

namespace pixnav::datagen {

// No usable goal for this start pose; the caller draws another one.
class SkipEpisode : public Error {
 public:
  using Error::Error;
};

struct GoalSampling {
  double min_geodesic = 0.5;
  double max_geodesic = 6.0;
  int max_draws = 200;
};

struct PixelGoal {
  int x = 0;
  int y = 0;
  sim::PixelTarget target;
  double geodesic = 0.0;  // from the agent to target.navigable
};

// Rejection-samples a pixel whose resolved floor point is reachable and within
// the geodesic range of the agent. `from_agent` is a distance field rooted at
// the agent's position.
PixelGoal sample_pixel_goal(const sim::World& world, const sim::Frame& frame, const sim::Pose& pose,
                            const sim::Camera& camera, const sim::DistanceField& from_agent, Rng& rng,
                            const GoalSampling& sampling = {});

// Goal pixel position in later frames, normalised to [0, 1].
struct TrackedPixel {
  double x = 0.0;
  double y = 0.0;
  bool visible = false;
  friend bool operator==(const TrackedPixel&, const TrackedPixel&) = default;
};

struct Episode {
  std::uint64_t world_seed = 0;
  sim::Camera camera;
  sim::Pose start_pose;
  int goal_x = 0;
  int goal_y = 0;
  sim::Vec3 goal_point;      // surface seen through the goal pixel
  sim::Vec3 goal_navigable;  // floor point the expert walks to
  double goal_geodesic = 0.0;
  std::vector<sim::Pose> poses;                     // pose at each step
  std::vector<std::vector<std::uint8_t>> frames;    // RGB at each step
  std::vector<sim::ActionId> actions;               // expert action at each step
  std::vector<TrackedPixel> tracked;
  std::vector<int> temporal_distance;               // remaining steps, T - t

  int length() const { return static_cast<int>(actions.size()); }
  friend bool operator==(const Episode&, const Episode&) = default;
};

struct EpisodeParams {
  GoalSampling sampling;
  double stop_radius = 1.0;
  int max_length = 64;
  sim::StepParams step;
};

// Samples a goal in the first frame, labels the expert trajectory toward it
// and renders every step. Throws SkipEpisode when no goal qualifies or the
// expert needs more than max_length steps.
Episode generate_episode(const sim::World& world, const sim::Pose& start, const sim::Camera& camera, Rng& rng,
                         const EpisodeParams& params = {});

// Uniform free position (cell centre plus jitter) and a random heading, pitch 0.
sim::Pose sample_start_pose(const sim::World& world, Rng& rng, int turn_deg = 30);

// Structural invariants of a labelled episode; empty when valid.
std::string check_episode(const Episode& e);

}  // namespace pixnav::datagen
