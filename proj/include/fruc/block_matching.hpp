#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fruc/frame.hpp"

namespace fruc {

struct MotionVector {
  int dx = 0;
  int dy = 0;
  bool operator==(const MotionVector&) const = default;
};

// What the block grid is anchored on: the frame being synthesized
// (bilateral search) or one of the two reference frames (unilateral).
enum class FieldAnchor { interpolated_frame, previous_frame, next_frame };

struct MotionField {
  FieldAnchor anchor = FieldAnchor::interpolated_frame;
  int block_size = 0;
  int cols = 0;
  int rows = 0;
  std::vector<MotionVector> vectors;  // row-major, cols * rows
  std::vector<std::uint32_t> costs;   // minimum SAD per block

  MotionVector& vec(int col, int row) {
    return vectors[static_cast<std::size_t>(row) * cols + col];
  }
  const MotionVector& vec(int col, int row) const {
    return vectors[static_cast<std::size_t>(row) * cols + col];
  }
  std::uint32_t& cost(int col, int row) {
    return costs[static_cast<std::size_t>(row) * cols + col];
  }
  std::uint32_t cost(int col, int row) const {
    return costs[static_cast<std::size_t>(row) * cols + col];
  }

  bool operator==(const MotionField&) const = default;
};

enum class Mode { unilateral, bilateral, proposed };

struct FrucConfig {
  int uni_block = 8;
  int uni_search = 16;
  int bi_block = 16;
  int bi_search = 8;
  int obmc_margin = 2;
  Mode mode = Mode::proposed;

  void validate() const;       // throws std::invalid_argument
  int pad_multiple() const;    // lcm of the two block sizes
};

// Sum of absolute differences over a block_w x block_h window; reads
// outside either plane resolve by edge replication.
std::uint32_t sad(const Plane& a, int ax, int ay, const Plane& b, int bx,
                  int by, int block_w, int block_h);

// Full search over dx,dy in [-search, +search]. Ties in SAD are broken by
// the smaller dx*dx + dy*dy, then by scan order (dy then dx ascending), so
// identical inputs always give identical fields.
//
// Bilateral: grid anchored on the frame to be synthesized; candidate cost
// is the SAD between the previous frame displaced by +mv and the next
// frame displaced by -mv.
MotionField bilateral_me(const Frame& prev, const Frame& next,
                         const FrucConfig& cfg);

// Unilateral: grid anchored on prev (forward) or next (backward); the
// vector points into the opposite frame.
MotionField forward_me(const Frame& prev, const Frame& next,
                       const FrucConfig& cfg);
MotionField backward_me(const Frame& prev, const Frame& next,
                        const FrucConfig& cfg);

// SAD between the two reference blocks selected by a bilateral vector,
// e.g. after the vector was altered by smoothing.
std::uint32_t block_cost_along(const Frame& prev, const Frame& next,
                               int origin_x, int origin_y, MotionVector mv,
                               int block_size);

// One line per block: "col row dx dy cost".
std::string dump_motion_field(const MotionField& field);

}  // namespace fruc
