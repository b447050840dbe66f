#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pixnav/evaluation/pixnav_eval.hpp"
#include "pixnav/planner/planner.hpp"

namespace pixnav::evaluation {

struct ObjectNavSpec {
  std::uint64_t world_seed = 0;
  sim::Camera camera;
  sim::Pose start_pose;
  sim::Category target = sim::Category::Bed;
  double shortest = 0.0;  // start to the nearest approach cell of any instance
  int max_steps = 500;
  double success_radius = 1.0;
};

nlohmann::json to_json(const ObjectNavSpec& s);
ObjectNavSpec objectnav_spec_from_json(const nlohmann::json& j);

// Distance field over the approach cells of every instance of `target`.
sim::DistanceField target_field(const sim::World& world, sim::Category target);

struct HierarchicalConfig {
  std::vector<adapters::AdapterSpec> adapters;  // vlm, llm, detector, segmenter
  AgentFactory skill;                           // low-level PixNav agent
  std::string skill_name = "expert";            // recorded for replays
  int replan_period = 64;
  double skill_stop_radius = 0.5;  // read by oracle skills only
};

// Everything but the skill factory; credentials are never written.
nlohmann::json to_json(const HierarchicalConfig& c);
// Leaves `skill` empty.
HierarchicalConfig hierarchical_config_from_json(const nlohmann::json& j);

// All four roles on the mock backend.
std::vector<adapters::AdapterSpec> mock_adapter_specs();

struct ObjectNavOutcome {
  EvalResult result;
  planner::Transcript transcript;
  int rounds = 0;            // panoramas taken
  bool error = false;        // adapter or planner failure; excluded from metrics
  std::string error_message;
};

// Hierarchical loop: level the camera, capture a panorama (charged as twelve
// 30-degree turns), caption, summarize, localize and cluster, detect the target
// in every view, plan, turn to the chosen view, pick a goal pixel and run the
// PixNav skill until it stops or the replan period ends. A skill Stop on an
// object goal becomes the episode Stop. Success: Stop within success_radius
// geodesic of any instance.
ObjectNavOutcome run_objectnav_episode(const sim::World& world, const ObjectNavSpec& spec,
                                       const HierarchicalConfig& config);

// Specs with starts more than success_radius from every target instance.
// Spec k uses world first_world_seed + (k mod world_count).
std::vector<ObjectNavSpec> sample_objectnav_episodes(const EvalSampling& sampling, int n, const sim::Camera& camera = {});

struct ObjectNavSummary {
  Metrics metrics;  // over episodes without errors
  int errors = 0;
};

ObjectNavSummary summarize_objectnav(const std::vector<ObjectNavOutcome>& outcomes);

// Episodes in parallel; outcomes keep spec order.
std::vector<ObjectNavOutcome> evaluate_objectnav(const std::vector<ObjectNavSpec>& specs,
                                                 const HierarchicalConfig& config, int jobs = 0);

// Scripted scenarios: the target is visible from the start about 2 m away;
// or the target sits in an unexplored room reached through the corridor. The
// routing start lies in a kitchen or living room 3.5 to 5.5 m from a bed, sees
// the corridor but no bed, and its shortest route crosses the corridor
// straight into the bedroom.
ObjectNavSpec visible_target_scenario();
ObjectNavSpec prior_routing_scenario();

// Mock-pipeline perception quality against simulator truth over `n`
// panoramas: localization counts the current node's type matching the room
// under the agent; clustering counts graphs whose view partition equals the
// partition by dominant visible room instance.
struct PerceptionAccuracy {
  int panoramas = 0;
  double localization = 0.0;
  double clustering = 0.0;
};

PerceptionAccuracy perception_accuracy(const EvalSampling& sampling, int n);

}  // namespace pixnav::evaluation
