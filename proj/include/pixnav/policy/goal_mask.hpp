#pragma once

#include <cstdint>
#include <vector>

namespace pixnav::policy {

struct GoalMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // row-major, 0 or 1

  int at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t ones() const;
};

// Ones on [x - delta, x + delta] x [y - delta, y + delta] clipped to the image.
GoalMask build_goal_mask(int x, int y, int width, int height, int delta = 2);

}  // namespace pixnav::policy
