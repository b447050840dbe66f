#pragma once

#include <span>
#include <vector>

#include "pixnav/sim/agent.hpp"
#include "pixnav/sim/geometry.hpp"
#include "pixnav/sim/world.hpp"

namespace pixnav::sim {

// Single- or multi-source shortest distances over free cells: 8-connected,
// diagonal cost sqrt(2) * cell_size, no cutting past blocked corners.
class DistanceField {
 public:
  static DistanceField from_point(const World& world, Vec2 source);
  static DistanceField from_cells(const World& world, std::span<const CellIndex> sources);

  // Distance between source cell centres and `cell`; +inf when unreachable.
  double at_cell(CellIndex cell) const;
  // Geodesic from the source to an arbitrary free point, including the
  // offsets between the points and their cell centres.
  double to_point(Vec2 p) const;
  const World& world() const { return *world_; }

 private:
  DistanceField(const World& world, std::span<const CellIndex> sources);
  const World* world_;
  std::vector<double> dist_;
  bool point_source_ = false;
  Vec2 source_point_;
  CellIndex source_cell_;
};

// Geodesic distance between two free points; +inf if disconnected. Throws
// ValidationError when either point lies in a blocked cell.
double geodesic_distance(const World& world, Vec2 a, Vec2 b);

// Free cells 8-adjacent to an object's footprint: where an agent can stand
// next to it.
std::vector<CellIndex> approach_cells(const World& world, const Object& object);

// Greedy privileged expert: walks toward the farthest line-of-sight waypoint
// along the distance-field descent, turning in place when the heading is off.
class ExpertPolicy {
 public:
  ExpertPolicy(const World& world, Vec2 target, double stop_radius, StepParams params = {});
  ExpertPolicy(DistanceField field, double stop_radius, StepParams params = {});

  ActionId next_action(const Pose& pose) const;
  double remaining(const Pose& pose) const { return field_.to_point(pose.position()); }
  const DistanceField& field() const { return field_; }

 private:
  Vec2 waypoint(const Pose& pose) const;
  DistanceField field_;
  double stop_radius_;
  StepParams params_;
  bool has_target_point_ = false;
  Vec2 target_;
};

// Expert action sequence from `pose` that ends (with Stop) within
// `stop_radius` geodesic of `target`. Falls back to an exhaustive search over
// the pose lattice when the greedy expert cycles. Throws ValidationError when
// the target cannot be reached.
std::vector<ActionId> shortest_path_actions(const World& world, const Pose& pose, Vec2 target,
                                            double stop_radius, const StepParams& params = {});

struct Replay {
  std::vector<Pose> poses;  // poses[i] is the pose before actions[i]
  Pose final_pose;
  double path_length = 0.0;
  bool stopped = false;
};

Replay replay_actions(const World& world, const Pose& start, std::span<const ActionId> actions,
                      const StepParams& params = {});

}  // namespace pixnav::sim
