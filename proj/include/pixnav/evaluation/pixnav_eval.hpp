#pragma once

#include <functional>
#include <memory>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "pixnav/datagen/episode.hpp"
#include "pixnav/policy/model.hpp"
#include "pixnav/sim/world.hpp"

namespace pixnav::evaluation {

enum class Band { Near, Far };  // 1-3 m and 3-5 m geodesic

struct BandRange {
  double lo = 0.0;
  double hi = 0.0;
  bool lo_inclusive = true;
  bool contains(double d) const { return (lo_inclusive ? d >= lo : d > lo) && d <= hi; }
};

BandRange band_range(Band b);
std::string to_string(Band b);  // "1-3m", "3-5m"
Band parse_band(const std::string& s);

struct EvalEpisodeSpec {
  std::uint64_t world_seed = 0;
  sim::Camera camera;
  sim::Pose start_pose;
  int goal_x = 0;
  int goal_y = 0;
  sim::Vec3 goal_point;
  sim::Vec3 goal_navigable;
  double geodesic = 0.0;  // start to goal_navigable
  Band band = Band::Near;
  int max_steps = 64;
  double success_radius = 1.0;
};

nlohmann::json to_json(const EvalEpisodeSpec& s);

struct EvalResult {
  bool success = false;
  bool stopped = false;
  double path_length = 0.0;     // meters walked
  double shortest = 0.0;        // initial geodesic
  double final_geodesic = 0.0;  // to the goal when the episode ended
  int steps = 0;
  std::vector<sim::Pose> trajectory;  // start pose plus the pose after each move
  std::vector<sim::ActionId> actions;

  double spl() const;
};

nlohmann::json to_json(const EvalResult& r);

struct Metrics {
  int episodes = 0;
  double sr = 0.0;
  double spl = 0.0;
  double dtg = 0.0;
};

nlohmann::json to_json(const Metrics& m);

// SR = mean success, SPL = mean success * l* / max(l_agent, l*), DTG = mean
// final geodesic. Throws ValidationError on an empty set.
Metrics aggregate_metrics(std::span<const EvalResult> results);

// Evaluation worlds; seeds must not overlap the training worlds.
struct EvalSampling {
  std::uint64_t first_world_seed = 50000;
  int world_count = 20;
  std::uint64_t seed = 7;
  int max_steps = 64;
  double success_radius = 1.0;
  int attempts_per_world = 60;
};

// Specs whose goal geodesic lies in `band`. Spec k uses world
// first_world_seed + (k mod world_count) and draws its start pose and goal
// pixel from rng streams keyed by (seed, band, k); the start pose does not
// depend on the camera, so camera variations re-render the same starts.
std::vector<EvalEpisodeSpec> sample_eval_episodes(const EvalSampling& sampling, Band band, int n,
                                                  const sim::Camera& camera = {});

struct Observation {
  std::span<const std::uint8_t> rgb;
  sim::Pose pose;  // privileged; only oracle agents read it
};

class PixNavAgent {
 public:
  virtual ~PixNavAgent() = default;
  virtual void reset(const sim::World& world, const EvalEpisodeSpec& spec, std::span<const std::uint8_t> first_rgb) = 0;
  virtual sim::ActionId act(const Observation& obs) = 0;
};

using AgentFactory = std::function<std::unique_ptr<PixNavAgent>()>;

// Argmax over the learned policy with the full observation history.
class LearnedAgent : public PixNavAgent {
 public:
  explicit LearnedAgent(const policy::PixNavPolicy<float>& model) : model_(&model) {}
  void reset(const sim::World& world, const EvalEpisodeSpec& spec, std::span<const std::uint8_t> first_rgb) override;
  sim::ActionId act(const Observation& obs) override;

 private:
  const policy::PixNavPolicy<float>* model_;
  std::unique_ptr<policy::PolicySession<float>> session_;
};

// Replays the privileged expert's shortest action sequence.
class ExpertAgent : public PixNavAgent {
 public:
  void reset(const sim::World& world, const EvalEpisodeSpec& spec, std::span<const std::uint8_t> first_rgb) override;
  sim::ActionId act(const Observation& obs) override;

 private:
  std::vector<sim::ActionId> plan_;
  std::size_t next_ = 0;
};

// Uniform random action per step, reseeded per episode from its EvalEpisodeSpec.
class RandomAgent : public PixNavAgent {
 public:
  explicit RandomAgent(std::uint64_t seed) : seed_(seed) {}
  void reset(const sim::World& world, const EvalEpisodeSpec& spec, std::span<const std::uint8_t> first_rgb) override;
  sim::ActionId act(const Observation& obs) override;

 private:
  std::uint64_t seed_;
  Rng rng_;
};

// Closed loop: render, act, step until Stop or max_steps. Success requires
// Stop within success_radius geodesic of the goal.
EvalResult run_pixnav_episode(PixNavAgent& agent, const sim::World& world, const EvalEpisodeSpec& spec);

// Evaluates specs in parallel (one agent per worker); results keep spec order.
std::vector<EvalResult> evaluate(std::span<const EvalEpisodeSpec> specs, const AgentFactory& factory, int jobs = 0);

struct CameraSetting {
  std::string name;
  sim::Camera camera;
};

// Default camera first, then height 0.48 / 1.28 m and hfov 60 / 100 degrees.
std::vector<CameraSetting> default_camera_variations();

struct SuiteRow {
  std::string name;  // camera or variant label
  sim::Camera camera;
  Band band = Band::Near;
  Metrics metrics;
};

std::vector<SuiteRow> camera_variation_suite(const AgentFactory& factory, const EvalSampling& sampling, int n,
                                             const std::vector<CameraSetting>& variations, int jobs = 0);

// Markdown table with one row per SuiteRow.
std::string markdown_table(const std::vector<SuiteRow>& rows);

struct AblationVariant {
  std::string name;  // "full", "w/o tracking", "w/o distance", "w/o fusion"
  policy::PolicyConfig config;
};

std::vector<AblationVariant> ablation_variants(const policy::PolicyConfig& base);

// Top-down map with the trajectory, start (blue) and goal (red).
std::vector<std::uint8_t> render_trajectory(const sim::World& world, std::span<const sim::Pose> trajectory,
                                            sim::Vec2 goal, int scale);

}  // namespace pixnav::evaluation
