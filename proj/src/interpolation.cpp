#include "fruc/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

#include "fruc/mv_smoothing.hpp"

namespace fruc {

namespace {

int half_away_from_zero(int v) {
  return v >= 0 ? (v + 1) / 2 : -((-v + 1) / 2);
}

void check_pair(const Frame& prev, const Frame& next) {
  if (prev.width() != next.width() || prev.height() != next.height() ||
      prev.color_mode() != next.color_mode())
    throw std::invalid_argument("reference frames must share dimensions and color mode");
}

void check_grid(const Frame& frame, const MotionField& field) {
  if (field.block_size < 1 ||
      field.cols * field.block_size != frame.width() ||
      field.rows * field.block_size != frame.height())
    throw std::invalid_argument("motion field grid does not cover the frames");
}

void check_chroma_block(const Frame& frame, int block_size) {
  if (frame.has_chroma() && block_size % 2 != 0)
    throw std::invalid_argument("chroma interpolation requires an even block size");
}

// Chroma-grid version of a field: half block size, vectors halved toward
// zero, grid shape unchanged.
MotionField halve_field(const MotionField& field) {
  MotionField half = field;
  half.block_size = field.block_size / 2;
  for (MotionVector& v : half.vectors) {
    v.dx /= 2;
    v.dy /= 2;
  }
  return half;
}

Plane bilateral_mci_plane(const Plane& p, const Plane& n,
                          const MotionField& field) {
  Plane out = make_plane(p.width, p.height);
  const int block = field.block_size;
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      const MotionVector mv = field.vec(c, r);
      for (int y = r * block; y < (r + 1) * block; ++y) {
        for (int x = c * block; x < (c + 1) * block; ++x) {
          const int a = p.at_clamped(x + mv.dx, y + mv.dy);
          const int b = n.at_clamped(x - mv.dx, y - mv.dy);
          out.at(x, y) = static_cast<std::uint8_t>((a + b + 1) / 2);
        }
      }
    }
  }
  return out;
}

Plane obmc_plane(const Plane& p, const Plane& n, const MotionField& field,
                 int margin) {
  const int block = field.block_size;
  const int w = p.width;
  const int h = p.height;
  std::vector<std::uint32_t> acc(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::uint32_t> coverage(static_cast<std::size_t>(w) * h, 0);
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      const MotionVector mv = field.vec(c, r);
      const int y_begin = std::max(0, r * block - margin);
      const int y_end = std::min(h, (r + 1) * block + margin);
      const int x_begin = std::max(0, c * block - margin);
      const int x_end = std::min(w, (c + 1) * block + margin);
      for (int y = y_begin; y < y_end; ++y) {
        for (int x = x_begin; x < x_end; ++x) {
          const std::size_t i = static_cast<std::size_t>(y) * w + x;
          acc[i] += p.at_clamped(x + mv.dx, y + mv.dy);
          acc[i] += n.at_clamped(x - mv.dx, y - mv.dy);
          coverage[i] += 1;
        }
      }
    }
  }
  Plane out = make_plane(w, h);
  for (std::size_t i = 0; i < acc.size(); ++i) {
    // round-half-up of acc / (2 * coverage); every pixel is covered at
    // least by its own block
    out.samples[i] = static_cast<std::uint8_t>((acc[i] + coverage[i]) /
                                               (2 * coverage[i]));
  }
  return out;
}

void splat_plane(const Plane& anchor, const Plane& matched,
                 const MotionField& field, PixelAccumulator& out) {
  const int block = field.block_size;
  const int w = anchor.width;
  const int h = anchor.height;
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      const MotionVector mv = field.vec(c, r);
      const int off_x = half_away_from_zero(mv.dx);
      const int off_y = half_away_from_zero(mv.dy);
      for (int i = 0; i < block; ++i) {
        const int sy = r * block + i;
        const int ty = sy + off_y;
        if (ty < 0 || ty >= h) continue;
        for (int j = 0; j < block; ++j) {
          const int sx = c * block + j;
          const int tx = sx + off_x;
          if (tx < 0 || tx >= w) continue;
          const std::size_t t = static_cast<std::size_t>(ty) * w + tx;
          out.sums[t] += anchor.at(sx, sy) +
                         matched.at_clamped(sx + mv.dx, sy + mv.dy);
          out.counts[t] += 1;
        }
      }
    }
  }
}

Plane merge_plane(const PixelAccumulator& fwd, const PixelAccumulator& bwd,
                  const Plane& bilateral, MergeStats* stats) {
  Plane out = make_plane(bilateral.width, bilateral.height);
  for (int y = 0; y < out.height; ++y) {
    for (int x = 0; x < out.width; ++x) {
      const bool fwd_hole = fwd.is_hole(x, y);
      const bool bwd_hole = bwd.is_hole(x, y);
      std::uint8_t v;
      if (!fwd_hole && bwd_hole) {
        v = fwd.resolve(x, y);
        if (stats) ++stats->forward_only;
      } else if (fwd_hole && !bwd_hole) {
        v = bwd.resolve(x, y);
        if (stats) ++stats->backward_only;
      } else if (!fwd_hole && !bwd_hole) {
        v = static_cast<std::uint8_t>((fwd.resolve(x, y) + bwd.resolve(x, y) + 1) / 2);
        if (stats) ++stats->both;
      } else {
        v = bilateral.at(x, y);
        if (stats) ++stats->bilateral_fill;
      }
      out.at(x, y) = v;
    }
  }
  return out;
}

// true = equal-weight branch (cost reached the running mean of its
// predecessors); the first block has no history and stays weighted.
std::vector<std::uint8_t> fusion_branches(std::span<const std::uint32_t> costs) {
  std::vector<std::uint8_t> equal_weight(costs.size(), 0);
  std::uint64_t history = 0;
  for (std::size_t k = 0; k < costs.size(); ++k) {
    if (k > 0 && static_cast<std::uint64_t>(costs[k]) * k >= history)
      equal_weight[k] = 1;
    history += costs[k];
  }
  return equal_weight;
}

Plane fuse_plane(const Plane& bilateral, const Plane& merged,
                 const std::vector<std::uint8_t>& equal_weight, int cols,
                 int rows, int block) {
  Plane out = make_plane(bilateral.width, bilateral.height);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const bool equal = equal_weight[static_cast<std::size_t>(r) * cols + c] != 0;
      for (int y = r * block; y < (r + 1) * block; ++y) {
        for (int x = c * block; x < (c + 1) * block; ++x) {
          const int b = bilateral.at(x, y);
          const int m = merged.at(x, y);
          out.at(x, y) = static_cast<std::uint8_t>(
              equal ? (b + m + 1) / 2 : (4 * b + 2 * m + 3) / 6);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::int64_t PixelAccumulator::hole_count() const {
  std::int64_t holes = 0;
  for (std::uint32_t c : counts) holes += (c == 0);
  return holes;
}

PixelAccumulator make_accumulator(int width, int height) {
  PixelAccumulator acc;
  acc.width = width;
  acc.height = height;
  acc.sums.assign(static_cast<std::size_t>(width) * height, 0);
  acc.counts.assign(static_cast<std::size_t>(width) * height, 0);
  return acc;
}

Frame bilateral_mci(const Frame& prev, const Frame& next,
                    const MotionField& field) {
  check_pair(prev, next);
  check_grid(prev, field);
  if (field.anchor != FieldAnchor::interpolated_frame)
    throw std::invalid_argument("bilateral_mci requires a bilateral field");
  check_chroma_block(prev, field.block_size);
  Frame out;
  out.luma = bilateral_mci_plane(prev.luma, next.luma, field);
  if (prev.has_chroma()) {
    const MotionField half = halve_field(field);
    out.chroma_u = bilateral_mci_plane(prev.chroma_u, next.chroma_u, half);
    out.chroma_v = bilateral_mci_plane(prev.chroma_v, next.chroma_v, half);
  }
  return out;
}

Frame obmc(const Frame& prev, const Frame& next, const MotionField& field,
           int margin) {
  check_pair(prev, next);
  check_grid(prev, field);
  if (field.anchor != FieldAnchor::interpolated_frame)
    throw std::invalid_argument("obmc requires a bilateral field");
  if (margin < 0 || 2 * margin >= field.block_size)
    throw std::invalid_argument("obmc margin must be less than half the block size");
  check_chroma_block(prev, field.block_size);
  Frame out;
  out.luma = obmc_plane(prev.luma, next.luma, field, margin);
  if (prev.has_chroma()) {
    const MotionField half = halve_field(field);
    out.chroma_u = obmc_plane(prev.chroma_u, next.chroma_u, half, margin / 2);
    out.chroma_v = obmc_plane(prev.chroma_v, next.chroma_v, half, margin / 2);
  }
  return out;
}

AccumulatorFrame unilateral_mci(const Frame& prev, const Frame& next,
                                const MotionField& field) {
  check_pair(prev, next);
  check_grid(prev, field);
  check_chroma_block(prev, field.block_size);
  const Frame* anchor = nullptr;
  const Frame* matched = nullptr;
  if (field.anchor == FieldAnchor::previous_frame) {
    anchor = &prev;
    matched = &next;
  } else if (field.anchor == FieldAnchor::next_frame) {
    anchor = &next;
    matched = &prev;
  } else {
    throw std::invalid_argument("unilateral_mci requires a forward or backward field");
  }
  AccumulatorFrame out;
  out.luma = make_accumulator(prev.width(), prev.height());
  splat_plane(anchor->luma, matched->luma, field, out.luma);
  if (prev.has_chroma()) {
    const MotionField half = halve_field(field);
    out.chroma_u = make_accumulator(prev.width() / 2, prev.height() / 2);
    out.chroma_v = make_accumulator(prev.width() / 2, prev.height() / 2);
    splat_plane(anchor->chroma_u, matched->chroma_u, half, out.chroma_u);
    splat_plane(anchor->chroma_v, matched->chroma_v, half, out.chroma_v);
  }
  return out;
}

Frame merge_unilateral(const AccumulatorFrame& forward,
                       const AccumulatorFrame& backward,
                       const Frame& bilateral, MergeStats* stats) {
  if (forward.luma.width != bilateral.width() ||
      forward.luma.height != bilateral.height() ||
      backward.luma.width != bilateral.width() ||
      backward.luma.height != bilateral.height() ||
      forward.has_chroma() != bilateral.has_chroma() ||
      backward.has_chroma() != bilateral.has_chroma())
    throw std::invalid_argument("merge_unilateral: mismatched inputs");
  Frame out;
  out.luma = merge_plane(forward.luma, backward.luma, bilateral.luma, stats);
  if (bilateral.has_chroma()) {
    out.chroma_u = merge_plane(forward.chroma_u, backward.chroma_u,
                               bilateral.chroma_u, nullptr);
    out.chroma_v = merge_plane(forward.chroma_v, backward.chroma_v,
                               bilateral.chroma_v, nullptr);
  }
  return out;
}

Frame adaptive_fusion(const Frame& bilateral, const Frame& merged,
                      std::span<const std::uint32_t> block_costs,
                      int block_size) {
  check_pair(bilateral, merged);
  if (block_size < 1 || bilateral.width() % block_size != 0 ||
      bilateral.height() % block_size != 0)
    throw std::invalid_argument("adaptive_fusion: block size does not tile the frame");
  const int cols = bilateral.width() / block_size;
  const int rows = bilateral.height() / block_size;
  if (block_costs.size() != static_cast<std::size_t>(cols) * rows)
    throw std::invalid_argument("adaptive_fusion: cost grid does not match the frame");
  check_chroma_block(bilateral, block_size);

  const std::vector<std::uint8_t> equal_weight = fusion_branches(block_costs);
  Frame out;
  out.luma = fuse_plane(bilateral.luma, merged.luma, equal_weight, cols, rows,
                        block_size);
  if (bilateral.has_chroma()) {
    out.chroma_u = fuse_plane(bilateral.chroma_u, merged.chroma_u,
                              equal_weight, cols, rows, block_size / 2);
    out.chroma_v = fuse_plane(bilateral.chroma_v, merged.chroma_v,
                              equal_weight, cols, rows, block_size / 2);
  }
  return out;
}

Plane hole_mask(const PixelAccumulator& acc) {
  Plane mask = make_plane(acc.width, acc.height);
  for (std::size_t i = 0; i < acc.counts.size(); ++i)
    mask.samples[i] = acc.counts[i] == 0 ? 255 : 0;
  return mask;
}

Plane merged_hole_mask(const AccumulatorFrame& forward,
                       const AccumulatorFrame& backward) {
  Plane mask = make_plane(forward.luma.width, forward.luma.height);
  for (std::size_t i = 0; i < mask.samples.size(); ++i)
    mask.samples[i] =
        (forward.luma.counts[i] == 0 && backward.luma.counts[i] == 0) ? 255 : 0;
  return mask;
}

InterpolationSet interpolate_all(const Frame& prev, const Frame& next,
                                 const FrucConfig& cfg) {
  cfg.validate();
  check_pair(prev, next);
  InterpolationSet set;
  set.bilateral_field = smooth_field(bilateral_me(prev, next, cfg), prev, next);
  set.bilateral = obmc(prev, next, set.bilateral_field, cfg.obmc_margin);
  set.forward_field = forward_me(prev, next, cfg);
  set.backward_field = backward_me(prev, next, cfg);
  set.forward = unilateral_mci(prev, next, set.forward_field);
  set.backward = unilateral_mci(prev, next, set.backward_field);
  set.merged = merge_unilateral(set.forward, set.backward, set.bilateral,
                                &set.merge_stats);
  set.fused = adaptive_fusion(set.bilateral, set.merged,
                              set.bilateral_field.costs, cfg.bi_block);
  return set;
}

}  // namespace fruc
