#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fruc/block_matching.hpp"
#include "fruc/frame.hpp"

namespace fruc {

// Intermediates of one interpolated pair, on the padded grid. Filled on
// request for debug dumps.
struct StageArtifacts {
  MotionField bilateral_field;  // post smoothing
  std::optional<MotionField> forward_field;
  std::optional<MotionField> backward_field;
  // Pixels missed by both unilateral passes, i.e. filled from the
  // bilateral frame. Only produced by the unilateral and proposed modes.
  std::optional<Plane> residual_hole_mask;
};

// Synthesizes the frame halfway between two references. Inputs are padded
// to the common block multiple, every stage runs padded, and the result is
// cropped back to the input size.
Frame interpolate_between(const Frame& prev, const Frame& next,
                          const FrucConfig& cfg,
                          StageArtifacts* artifacts = nullptr);

// 2N-1 frames: originals at even output positions, interpolations between
// each consecutive pair at odd positions. When artifacts is non-null it
// receives one entry per interpolated pair.
std::vector<Frame> double_rate(std::span<const Frame> frames,
                               const FrucConfig& cfg,
                               std::vector<StageArtifacts>* artifacts = nullptr);

// Frame rate and, when known, frame count of a rate-doubled stream.
SequenceMeta double_rate_meta(const SequenceMeta& meta);

// 1-based indices of the frames reconstruct_odd produces: 3, 5, ... up to
// the sequence length.
std::vector<int> odd_reconstruction_indices(std::int64_t frame_count);

// Re-synthesizes the odd frames (1-based, from 3 on) from their even
// neighbors; the inputs' odd frames are never read. When the last odd
// index has no following frame its previous even frame stands in for both
// references.
std::vector<Frame> reconstruct_odd(std::span<const Frame> frames,
                                   const FrucConfig& cfg,
                                   std::vector<StageArtifacts>* artifacts = nullptr);

}  // namespace fruc
