#pragma once

#include <span>

#include "fruc/block_matching.hpp"

namespace fruc {

// Candidate minimizing the summed Euclidean distance to all candidates.
// The result is always a member of the input; ties keep the earliest
// candidate, so callers control tie priority through list order.
MotionVector vector_median(std::span<const MotionVector> candidates);

// Replaces every vector of a bilateral field by the vector median of
// itself (first candidate) and its in-grid neighbors in raster order.
// Border blocks use the truncated neighborhood. Costs are recomputed
// along the smoothed vectors since those now generate the blocks.
MotionField smooth_field(const MotionField& field, const Frame& prev,
                         const Frame& next);

}  // namespace fruc
