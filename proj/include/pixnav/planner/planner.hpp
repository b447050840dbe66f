#pragma once

#include <array>
#include <functional>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pixnav/adapters/adapters.hpp"

namespace pixnav::planner {

inline constexpr int kPanoramaViews = 6;
inline constexpr int kViewSpacingDeg = 60;
inline constexpr const char* kRoomPrompt = "Describe the room type in the image";
inline constexpr const char* kObjectPrompt = "Describe the objects with details in the image";
inline constexpr const char* kPromptVersion = "pixnav-planner-prompts/1";

// Line-delimited JSON log of every adapter exchange and decision.
class Transcript {
 public:
  void add(nlohmann::json entry);
  const std::vector<nlohmann::json>& entries() const { return entries_; }
  std::string to_jsonl() const;
  static Transcript from_jsonl(const std::string& text);

 private:
  std::vector<nlohmann::json> entries_;
};

// Six views at yaw + 60 i, pitch 0; the agent pose itself is untouched.
std::vector<adapters::View> capture_panorama(const sim::World& world, const sim::Pose& pose, const sim::Camera& camera);

struct ViewCaption {
  int index = 0;
  int angle = 0;  // degrees relative to the capture heading
  std::string room_text;
  std::string objects_text;
};

// Two VLM queries per view with the fixed prompts; transport errors are
// retried twice before propagating.
std::vector<ViewCaption> caption_frames(adapters::Vlm& vlm, const std::vector<adapters::View>& views,
                                        Transcript* transcript = nullptr);

struct RoomRecord {
  int id = 0;
  int angle = 0;
  sim::RoomType type = sim::RoomType::Unknown;
  std::vector<sim::Category> objects;
  friend bool operator==(const RoomRecord&, const RoomRecord&) = default;
};

nlohmann::json to_json(const RoomRecord& r);

class PlannerError : public Error {
 public:
  using Error::Error;
};

struct SummaryResult {
  std::vector<RoomRecord> records;
  bool repaired = false;  // the first reply failed to parse
};

// Strict-JSON records for the six captions, with one repair reprompt.
// Throws PlannerError when the second reply is unusable too.
SummaryResult summarize(adapters::Llm& llm, const std::vector<ViewCaption>& captions,
                        Transcript* transcript = nullptr);

// Parses an LLM reply into records; nullopt unless it is a JSON array of six
// objects with IDs 0-5, the expected angles and known keys.
std::optional<std::vector<RoomRecord>> parse_records(const std::string& reply, const std::vector<ViewCaption>& captions);

struct RoomNode {
  int id = 0;  // smallest member record ID
  sim::RoomType type = sim::RoomType::Unknown;
  std::vector<int> members;  // record IDs
  std::vector<int> angles;
  std::vector<sim::Category> objects;  // sorted, unique
  int visited = 0;
  friend bool operator==(const RoomNode&, const RoomNode&) = default;
};

struct RoomGraph {
  std::vector<RoomNode> nodes;               // sorted by id
  std::vector<std::pair<int, int>> edges;    // node ids, a < b, sorted
  int current = -1;                          // node id

  const RoomNode* node(int id) const;
  // Canonical serialization; equal graphs serialize identically.
  nlohmann::json to_json() const;
  friend bool operator==(const RoomGraph&, const RoomGraph&) = default;
};

// Deterministic merge: same-type nodes joined by an edge, then same-type
// nodes with angles 60 degrees apart (cyclically), until no rule applies.
// The smallest ID survives; unknown-type nodes never merge.
RoomGraph cluster(const std::vector<RoomRecord>& records, const std::vector<std::pair<int, int>>& connections,
                  int current_record);
// Re-applies the merge rules to a graph (idempotent on clustered graphs).
RoomGraph recluster(const RoomGraph& graph);

// Accumulated across replans: visit counts per room type, every graph seen
// and the odometry positions where panoramas were taken.
struct Memory {
  std::array<int, sim::kNumRoomTypes + 1> visits{};
  std::vector<RoomGraph> history;
  std::vector<sim::Vec2> anchors;

  int visits_of(sim::RoomType t) const { return visits[static_cast<std::size_t>(t)]; }
};

// Asks the LLM for the current room and connections, clusters, marks visited
// flags from memory, records the current room as visited and appends the
// graph to memory. Connections naming unknown IDs are dropped with a
// transcript warning; an unusable reply falls back to view 0 and no edges.
RoomGraph localize_and_cluster(adapters::Llm& llm, const std::vector<RoomRecord>& records, Memory& memory,
                               Transcript* transcript = nullptr);

enum class PlanMode { GotoObject, GotoRoom };

struct PlanDecision {
  PlanMode mode = PlanMode::GotoRoom;
  int view = 0;  // panorama view index to face
  int angle = 0;
  int node = -1;
  sim::RoomType room_type = sim::RoomType::Unknown;  // of the chosen node
  std::string rationale;
  bool fallback = false;
};

nlohmann::json to_json(const PlanDecision& d);

// Exploitation short-circuit when `detected_view` is set; otherwise the LLM
// picks a room (two attempts), then the least-visited node by angle.
PlanDecision plan(adapters::Llm& llm, const RoomGraph& graph, sim::Category target, const Memory& memory,
                  std::optional<int> detected_view, Transcript* transcript = nullptr);

// Room type seen through a floor pixel of a view. Mock pipelines read it from
// privileged semantics; without one, every floor pixel qualifies.
using FloorLabeler = std::function<sim::RoomType(const adapters::View&, int x, int y)>;

FloorLabeler privileged_floor_labeler(const sim::World& world);

// Goal pixel in the decision's view: mask centroid snapped to the nearest
// in-mask pixel for objects; otherwise the centroid of the largest floor
// segment (restricted to the chosen room type when a labeler is given),
// snapped likewise; otherwise bottom centre.
struct PixelChoice {
  int x = 0;
  int y = 0;
  std::string source;  // "object", "floor", "frontier" or "fallback"
};

PixelChoice select_goal_pixel(const adapters::View& view, const PlanDecision& decision, sim::Category target,
                              adapters::Detector& detector, adapters::Segmenter& segmenter,
                              Transcript* transcript = nullptr, const FloorLabeler& labeler = {});

struct FrontierChoice {
  int view = 0;
  PixelChoice pixel;
};

// Exploration goal when the plan offers no new area: the floor pixel (on a
// 4-pixel grid, over all views) whose depth-projected point lies farthest
// from every memory anchor; the deepest such pixel without anchors. nullopt
// without visible floor.
std::optional<FrontierChoice> frontier_pixel(const std::vector<adapters::View>& views, const Memory& memory);

// Snaps the mask centroid to the nearest set pixel (ties: smallest y, then x).
std::optional<std::pair<int, int>> mask_centroid(const adapters::Mask& mask);
// Largest 4-connected component of floor pixels accepted by `keep`.
adapters::Mask largest_floor_segment(const sim::Frame& frame, const std::function<bool(int, int)>& keep = {});

}  // namespace pixnav::planner
