#include "fruc/pipeline.hpp"

#include <stdexcept>

#include "fruc/interpolation.hpp"
#include "fruc/mv_smoothing.hpp"

namespace fruc {

Frame interpolate_between(const Frame& prev, const Frame& next,
                          const FrucConfig& cfg, StageArtifacts* artifacts) {
  cfg.validate();
  if (prev.width() != next.width() || prev.height() != next.height() ||
      prev.color_mode() != next.color_mode())
    throw std::invalid_argument(
        "interpolate_between: reference frames must share dimensions and color mode");

  const int multiple = cfg.pad_multiple();
  const Frame p = pad_to_multiple(prev, multiple);
  const Frame n = pad_to_multiple(next, multiple);

  Frame out;
  if (cfg.mode == Mode::bilateral) {
    MotionField field = smooth_field(bilateral_me(p, n, cfg), p, n);
    out = obmc(p, n, field, cfg.obmc_margin);
    if (artifacts) artifacts->bilateral_field = std::move(field);
  } else {
    InterpolationSet set = interpolate_all(p, n, cfg);
    if (artifacts) {
      artifacts->bilateral_field = set.bilateral_field;
      artifacts->forward_field = set.forward_field;
      artifacts->backward_field = set.backward_field;
      artifacts->residual_hole_mask = merged_hole_mask(set.forward, set.backward);
    }
    out = cfg.mode == Mode::unilateral ? std::move(set.merged)
                                       : std::move(set.fused);
  }
  return crop(out, prev.width(), prev.height());
}

std::vector<Frame> double_rate(std::span<const Frame> frames,
                               const FrucConfig& cfg,
                               std::vector<StageArtifacts>* artifacts) {
  if (frames.size() < 2)
    throw std::invalid_argument("double_rate requires at least 2 frames");
  std::vector<Frame> out;
  out.reserve(frames.size() * 2 - 1);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    out.push_back(frames[i]);
    if (i + 1 < frames.size()) {
      StageArtifacts* sink = nullptr;
      if (artifacts) sink = &artifacts->emplace_back();
      out.push_back(interpolate_between(frames[i], frames[i + 1], cfg, sink));
    }
  }
  return out;
}

SequenceMeta double_rate_meta(const SequenceMeta& meta) {
  SequenceMeta doubled = meta;
  doubled.frame_rate.num *= 2;
  if (meta.frame_count) doubled.frame_count = *meta.frame_count * 2 - 1;
  return doubled;
}

std::vector<int> odd_reconstruction_indices(std::int64_t frame_count) {
  std::vector<int> indices;
  for (std::int64_t k = 3; k <= frame_count; k += 2)
    indices.push_back(static_cast<int>(k));
  return indices;
}

std::vector<Frame> reconstruct_odd(std::span<const Frame> frames,
                                   const FrucConfig& cfg,
                                   std::vector<StageArtifacts>* artifacts) {
  if (frames.size() < 3)
    throw std::invalid_argument("reconstruct_odd requires at least 3 frames");
  const auto n = static_cast<std::int64_t>(frames.size());
  std::vector<Frame> out;
  for (int k : odd_reconstruction_indices(n)) {
    const Frame& before = frames[static_cast<std::size_t>(k) - 2];
    const Frame& after =
        k < n ? frames[static_cast<std::size_t>(k)] : before;
    StageArtifacts* sink = nullptr;
    if (artifacts) sink = &artifacts->emplace_back();
    out.push_back(interpolate_between(before, after, cfg, sink));
  }
  return out;
}

}  // namespace fruc
