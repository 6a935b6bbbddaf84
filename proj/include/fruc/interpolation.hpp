#pragma once

#include <cstdint>
#include <span>

#include "fruc/block_matching.hpp"
#include "fruc/frame.hpp"

namespace fruc {

// Per-pixel accumulator for unilateral splatting. Each contributing block
// adds the prev+next sample pair into sums (twice the contributed mean,
// kept exact) and bumps counts by one. A zero count marks a hole; rounding
// to 8 bits happens once, at resolve time.
struct PixelAccumulator {
  int width = 0;
  int height = 0;
  std::vector<std::uint32_t> sums;
  std::vector<std::uint32_t> counts;

  bool is_hole(int x, int y) const {
    return counts[static_cast<std::size_t>(y) * width + x] == 0;
  }

  // Round-half-up of sums / (2 * counts). Requires a nonzero count.
  std::uint8_t resolve(int x, int y) const {
    const std::size_t i = static_cast<std::size_t>(y) * width + x;
    return static_cast<std::uint8_t>((sums[i] + counts[i]) / (2 * counts[i]));
  }

  std::int64_t hole_count() const;
};

PixelAccumulator make_accumulator(int width, int height);

struct AccumulatorFrame {
  PixelAccumulator luma;
  PixelAccumulator chroma_u;
  PixelAccumulator chroma_v;

  bool has_chroma() const { return !chroma_u.sums.empty(); }
};

// Luma-plane fill statistics of merge_unilateral.
struct MergeStats {
  std::int64_t forward_only = 0;
  std::int64_t backward_only = 0;
  std::int64_t both = 0;
  std::int64_t bilateral_fill = 0;
};

// Averages the block of the previous frame displaced by +mv with the block
// of the next frame displaced by -mv, per block of the bilateral field.
Frame bilateral_mci(const Frame& prev, const Frame& next,
                    const MotionField& field);

// Same predictions blended over enlarged (block + 2*margin) footprints.
// Every covering block contributes its prev/next pair with weight
// 1 / (2 * coverage), which reproduces the 1/2, 1/4, 1/8 pattern in the
// interior and renormalizes where neighbors are missing at frame borders.
Frame obmc(const Frame& prev, const Frame& next, const MotionField& field,
           int margin);

// Splats each anchor block, averaged with its matched block, onto the
// frame position displaced by half the vector (half away from zero).
// Overlaps accumulate; uncovered pixels stay holes.
AccumulatorFrame unilateral_mci(const Frame& prev, const Frame& next,
                                const MotionField& field);

// Per pixel: one-sided value where only one direction contributed, the
// rounded mean where both did, and the bilateral sample where neither did.
// The result has no holes.
Frame merge_unilateral(const AccumulatorFrame& forward,
                       const AccumulatorFrame& backward,
                       const Frame& bilateral, MergeStats* stats = nullptr);

// Blocks in raster order; a block whose cost reaches the running mean of
// all preceding costs takes the equal-weight average of the two frames,
// otherwise the bilateral frame gets double weight. The first block has no
// history and takes the weighted branch.
Frame adaptive_fusion(const Frame& bilateral, const Frame& merged,
                      std::span<const std::uint32_t> block_costs,
                      int block_size);

// 255 where the accumulator is a hole, 0 elsewhere.
Plane hole_mask(const PixelAccumulator& acc);

// 255 where both luma accumulators are holes, i.e. the pixels only the
// bilateral frame can fill.
Plane merged_hole_mask(const AccumulatorFrame& forward,
                       const AccumulatorFrame& backward);

// Every intermediate of the full chain on an already padded frame pair.
struct InterpolationSet {
  Frame bilateral;             // OBMC output of the smoothed bilateral field
  AccumulatorFrame forward;
  AccumulatorFrame backward;
  Frame merged;                // forward/backward joint, holes filled bilaterally
  Frame fused;                 // adaptive-threshold combination
  MotionField bilateral_field; // post smoothing; its costs drive the fusion
  MotionField forward_field;
  MotionField backward_field;
  MergeStats merge_stats;
};

InterpolationSet interpolate_all(const Frame& prev, const Frame& next,
                                 const FrucConfig& cfg);

}  // namespace fruc
