#pragma once

#include <cstdint>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pixnav/sim/agent.hpp"
#include "pixnav/sim/render.hpp"
#include "pixnav/sim/world.hpp"
#include "pixnav/util/error.hpp"

namespace pixnav::adapters {

// One camera view. Mocks may read the privileged channels (depth, semantics,
// pose); remote clients send only the RGB image.
struct View {
  sim::Frame frame;
  sim::Pose pose;
  sim::Camera camera;
};

struct Box {
  int x0 = 0;  // inclusive
  int y0 = 0;
  int x1 = 0;  // exclusive
  int y1 = 0;
  int area() const { return (x1 - x0) * (y1 - y0); }
  bool contains(int x, int y) const { return x >= x0 && x < x1 && y >= y0 && y < y1; }
  friend bool operator==(const Box&, const Box&) = default;
};

struct Detection {
  Box box;
  double score = 0.0;
  std::string category;
};

struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // 0/1, row-major
  bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
  int count() const;
  friend bool operator==(const Mask&, const Mask&) = default;
};

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
};

// Planner prompts carry a "STAGE: <name>" line and one ```json payload block;
// the mock LLM keys its answers on both.
inline constexpr const char* kStageSummarize = "STAGE: summarize";
inline constexpr const char* kStageLocalize = "STAGE: localize";
inline constexpr const char* kStagePlan = "STAGE: plan";

// First ```json ... ``` block of `text`, parsed; nullopt when absent or invalid.
std::optional<nlohmann::json> extract_json_block(const std::string& text);

class Vlm {
 public:
  virtual ~Vlm() = default;
  virtual std::string describe(const View& view, const std::string& prompt) = 0;
};

class Llm {
 public:
  virtual ~Llm() = default;
  virtual std::string complete(const std::vector<ChatMessage>& dialogue) = 0;
};

class Detector {
 public:
  virtual ~Detector() = default;
  // Empty when the category is absent.
  virtual std::vector<Detection> detect(const View& view, const std::string& category) = 0;
};

class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual Mask segment(const View& view, const Box& box) = 0;
};

// Versioned JSON rulebook driving the mocks: display names, category to room
// priors and caption templates.
struct Rulebook {
  nlohmann::json doc;

  static Rulebook defaults();
  static Rulebook load(const std::string& path);
  std::string room_name(sim::RoomType t) const;
  std::string object_name(sim::Category c) const;
  sim::RoomType prior(sim::Category c) const;
  std::string caption(const std::string& key) const;
  int min_object_pixels() const { return doc.at("min_object_pixels").get<int>(); }
  std::string refusal() const { return doc.at("refusal").get<std::string>(); }
  // Room types named in free text (longest names first, at most one per
  // occurrence), and object categories likewise.
  std::vector<sim::RoomType> rooms_in(const std::string& text) const;
  std::vector<sim::Category> objects_in(const std::string& text) const;
};

// Seeded perception noise for the mocks: each visible object is dropped with
// drop_prob; the room caption is replaced by a random type with mislabel_prob.
struct Noise {
  double drop_prob = 0.0;
  double mislabel_prob = 0.0;
  std::uint64_t seed = 0;
  bool enabled() const { return drop_prob > 0.0 || mislabel_prob > 0.0; }
};

// Visible objects and room type read from privileged semantics.
struct ViewTruth {
  sim::RoomType room = sim::RoomType::Unknown;  // largest visible floor area
  std::vector<std::pair<sim::Category, int>> objects;  // category, pixel count; descending count then name
};

ViewTruth view_truth(const sim::World& world, const View& view, int min_object_pixels);

class MockVlm : public Vlm {
 public:
  MockVlm(const sim::World& world, Rulebook rules, Noise noise = {})
      : world_(&world), rules_(std::move(rules)), noise_(noise) {}
  std::string describe(const View& view, const std::string& prompt) override;

 private:
  const sim::World* world_;
  Rulebook rules_;
  Noise noise_;
};

// Answers the planner's stage-marked prompts from the rulebook; unknown
// stages get the refusal text.
class MockLlm : public Llm {
 public:
  explicit MockLlm(Rulebook rules) : rules_(std::move(rules)) {}
  std::string complete(const std::vector<ChatMessage>& dialogue) override;

 private:
  Rulebook rules_;
};

class MockDetector : public Detector {
 public:
  MockDetector(const sim::World& world, Noise noise = {}) : world_(&world), noise_(noise) {}
  std::vector<Detection> detect(const View& view, const std::string& category) override;

 private:
  const sim::World* world_;
  Noise noise_;
};

class MockSegmenter : public Segmenter {
 public:
  explicit MockSegmenter(const sim::World& world) : world_(&world) {}
  // Pixels of the object instance covering most of the box.
  Mask segment(const View& view, const Box& box) override;

 private:
  const sim::World* world_;
};

struct RemoteConfig {
  std::string endpoint;  // http://host:port
  double timeout_s = 30.0;
  int retries = 2;       // extra attempts after the first
  double threshold = 0.35;  // detector score cut-off
  std::string api_key;   // sent as a bearer token when non-empty
};

// JSON over HTTP with base64 PNG images:
//   POST /v1/vlm/describe      {image, prompt}            -> {text}
//   POST /v1/llm/complete      {messages: [{role, content}]} -> {text}
//   POST /v1/detector/detect   {image, category, threshold} -> {detections: [{box: [x0,y0,x1,y1], score}]}
//   POST /v1/segmenter/segment {image, box}               -> {width, height, mask (base64 0/1 bytes)}
// Failures after all retries raise TransportError.
class RemoteClient {
 public:
  explicit RemoteClient(RemoteConfig config);
  nlohmann::json post(const std::string& path, const nlohmann::json& body) const;
  const RemoteConfig& config() const { return config_; }

 private:
  RemoteConfig config_;
  std::string host_;
  int port_ = 80;
};

class RemoteVlm : public Vlm {
 public:
  explicit RemoteVlm(RemoteConfig c) : client_(std::move(c)) {}
  std::string describe(const View& view, const std::string& prompt) override;

 private:
  RemoteClient client_;
};

class RemoteLlm : public Llm {
 public:
  explicit RemoteLlm(RemoteConfig c) : client_(std::move(c)) {}
  std::string complete(const std::vector<ChatMessage>& dialogue) override;

 private:
  RemoteClient client_;
};

class RemoteDetector : public Detector {
 public:
  explicit RemoteDetector(RemoteConfig c) : client_(std::move(c)) {}
  std::vector<Detection> detect(const View& view, const std::string& category) override;

 private:
  RemoteClient client_;
};

class RemoteSegmenter : public Segmenter {
 public:
  explicit RemoteSegmenter(RemoteConfig c) : client_(std::move(c)) {}
  Mask segment(const View& view, const Box& box) override;

 private:
  RemoteClient client_;
};

// Base64 PNG of the view's RGB image only.
std::string encode_view_image(const View& view);

struct AdapterSpec {
  std::string role;     // vlm, llm, detector, segmenter
  std::string backend = "mock";  // mock or remote
  std::string rulebook;  // mock: path, empty for the built-in rulebook
  Noise noise;
  RemoteConfig remote;
};

struct AdapterSet {
  std::unique_ptr<Vlm> vlm;
  std::unique_ptr<Llm> llm;
  std::unique_ptr<Detector> detector;
  std::unique_ptr<Segmenter> segmenter;
};

AdapterSpec adapter_spec_from_json(const std::string& role, const nlohmann::json& j);
nlohmann::json to_json(const AdapterSpec& s);

// Builds all four roles. Mock backends need `world`; remote backends read the
// API key from PIXNAV_API_KEY when AdapterSpec::api_key is empty.
AdapterSet make_adapters(const std::vector<AdapterSpec>& specs, const sim::World* world);

}  // namespace pixnav::adapters
