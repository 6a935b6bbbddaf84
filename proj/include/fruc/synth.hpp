#pragma once

#include <cstdint>
#include <vector>

#include "fruc/frame.hpp"

namespace fruc {

// Textured rectangle translating at an integer per-frame velocity. The
// texture is pinned to the mover, so it slides rigidly; rendering clips at
// the frame borders.
struct MoverSpec {
  std::uint64_t texture_seed = 1;
  int width = 0;
  int height = 0;
  int start_x = 0;
  int start_y = 0;
  int vel_x = 0;
  int vel_y = 0;
};

struct SynthSpec {
  int width = 0;
  int height = 0;
  int frame_count = 0;
  ColorMode color_mode = ColorMode::luma_only;
  bool noise_background = false;
  std::uint8_t flat_value = 128;
  std::uint64_t noise_seed = 0;
  std::vector<MoverSpec> movers;
};

// Scene at time t = time_num / time_den frames. Every mover displacement
// vel * t must land on an integer pixel; fractional times exist so tests
// can render the ground truth halfway between frames. Chroma planes of
// 4:2:0 output are neutral.
Frame synth_frame(const SynthSpec& spec, std::int64_t time_num,
                  std::int64_t time_den = 1);

// Frames at t = 0 .. frame_count-1. Deterministic given the seeds.
std::vector<Frame> synth_sequence(const SynthSpec& spec);

}  // namespace fruc
