#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "pixnav/sim/geometry.hpp"

namespace pixnav::sim {

enum class Cell : std::uint8_t { Free = 0, Wall = 1, Furniture = 2 };

enum class RoomType : std::uint8_t { Bedroom, Bathroom, Kitchen, LivingRoom, Corridor, Unknown };

// Closed vocabulary of furniture categories placed by the generator.
enum class Category : std::uint8_t {
  Bed,
  Wardrobe,
  Nightstand,
  Toilet,
  Sink,
  Bathtub,
  Refrigerator,
  Stove,
  Counter,
  Sofa,
  TvStand,
  Armchair,
  Plant,
};
inline constexpr int kNumCategories = 13;
inline constexpr int kNumRoomTypes = 5;  // excluding Unknown

std::string_view to_string(RoomType t);
std::string_view to_string(Category c);
std::optional<RoomType> parse_room_type(std::string_view s);
std::optional<Category> parse_category(std::string_view s);

// Room type a category is most commonly found in.
RoomType home_room(Category c);

// Reserved semantic ids; object instance i is kObjectIdBase + i.
inline constexpr std::int32_t kSemNone = 0;
inline constexpr std::int32_t kSemFloor = 1;
inline constexpr std::int32_t kSemWall = 2;
inline constexpr std::int32_t kSemCeiling = 3;
inline constexpr std::int32_t kObjectIdBase = 100;

inline constexpr double kWallHeight = 2.5;

struct Room {
  int id = 0;
  RoomType type = RoomType::Unknown;
  CellRect bounds;  // interior cells, excluding surrounding walls
  friend bool operator==(const Room&, const Room&) = default;
};

struct Object {
  int id = 0;
  Category category = Category::Bed;
  Box3 box;
  CellRect footprint;
  int room_id = 0;
  int color_id = 0;
  int semantic_id() const { return kObjectIdBase + id; }
  friend bool operator==(const Object&, const Object&) = default;
};

struct WorldSpec {
  int min_rooms = 3;
  int max_rooms = 5;
  double min_room_size = 4.0;  // meters, per side
  double max_room_size = 6.0;
  double corridor_width = 1.25;
  double door_width = 1.0;
  int max_objects_per_room = 3;

  void validate() const;
};

struct World {
  std::uint64_t seed = 0;
  double cell_size = 0.25;
  int width = 0;   // cells along x
  int height = 0;  // cells along y
  std::vector<Cell> occupancy;
  std::vector<int> room_labels;  // -1 on wall/furniture cells
  std::vector<int> object_at;    // object index or -1
  std::vector<Room> rooms;
  std::vector<Object> objects;

  bool in_bounds(CellIndex c) const { return c.ix >= 0 && c.iy >= 0 && c.ix < width && c.iy < height; }
  std::size_t index(CellIndex c) const { return static_cast<std::size_t>(c.iy) * width + c.ix; }
  Cell cell(CellIndex c) const { return in_bounds(c) ? occupancy[index(c)] : Cell::Wall; }
  bool is_free(CellIndex c) const { return cell(c) == Cell::Free; }
  CellIndex cell_of(Vec2 p) const;
  Vec2 cell_center(CellIndex c) const;
  bool is_free_point(Vec2 p) const { return is_free(cell_of(p)); }
  int room_at(Vec2 p) const;
  const Room& room(int id) const;
  std::size_t free_cell_count() const;

  friend bool operator==(const World&, const World&) = default;
};

// Deterministic procedural floorplan: a corridor with rooms on both sides,
// doors onto the corridor, and furniture boxes against room walls.
World generate_world(std::uint64_t seed, const WorldSpec& spec = {});

// Checks every structural invariant; returns a description of the first
// violation or an empty string.
std::string check_world_invariants(const World& world);

nlohmann::json world_to_json(const World& world);
World world_from_json(const nlohmann::json& doc);

// Top-down debug image, `scale` pixels per cell.
std::vector<std::uint8_t> render_top_down(const World& world, int scale);

}  // namespace pixnav::sim
