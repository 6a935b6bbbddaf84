#include "fruc/mv_smoothing.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fruc {

MotionVector vector_median(std::span<const MotionVector> candidates) {
  if (candidates.empty())
    throw std::invalid_argument("vector_median: empty candidate list");
  std::size_t best = 0;
  double best_sum = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    double sum = 0.0;
    for (const MotionVector& u : candidates) {
      const double dx = candidates[i].dx - u.dx;
      const double dy = candidates[i].dy - u.dy;
      sum += std::sqrt(dx * dx + dy * dy);
    }
    if (sum < best_sum) {
      best_sum = sum;
      best = i;
    }
  }
  return candidates[best];
}

MotionField smooth_field(const MotionField& field, const Frame& prev,
                         const Frame& next) {
  if (field.anchor != FieldAnchor::interpolated_frame)
    throw std::invalid_argument("smooth_field applies to bilateral fields only");
  if (field.cols * field.block_size != prev.width() ||
      field.rows * field.block_size != prev.height() ||
      prev.width() != next.width() || prev.height() != next.height())
    throw std::invalid_argument("smooth_field: field grid does not cover the frames");

  MotionField out = field;
  std::vector<MotionVector> candidates;
  candidates.reserve(9);
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      candidates.clear();
      candidates.push_back(field.vec(c, r));  // center has tie priority
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const int nr = r + dr;
          const int nc = c + dc;
          if (nr < 0 || nr >= field.rows || nc < 0 || nc >= field.cols) continue;
          candidates.push_back(field.vec(nc, nr));
        }
      }
      out.vec(c, r) = vector_median(candidates);
    }
  }
  for (int r = 0; r < field.rows; ++r)
    for (int c = 0; c < field.cols; ++c)
      out.cost(c, r) =
          block_cost_along(prev, next, c * field.block_size,
                           r * field.block_size, out.vec(c, r), field.block_size);
  return out;
}

}  // namespace fruc
