#include "fruc/synth.hpp"

#include <algorithm>
#include <stdexcept>

#include "fruc/rng.hpp"

namespace fruc {

namespace {

int displaced(int start, int velocity, std::int64_t num, std::int64_t den) {
  const std::int64_t scaled = static_cast<std::int64_t>(velocity) * num;
  if (scaled % den != 0)
    throw std::invalid_argument(
        "synth_frame: mover displacement does not land on an integer pixel");
  return start + static_cast<int>(scaled / den);
}

void fill_background(Plane& luma, const SynthSpec& spec) {
  if (spec.noise_background) {
    Xorshift64Star rng(spec.noise_seed);
    for (std::uint8_t& s : luma.samples) s = rng.next_byte();
  } else {
    std::fill(luma.samples.begin(), luma.samples.end(), spec.flat_value);
  }
}

void blit_mover(Plane& luma, const MoverSpec& mover, int pos_x, int pos_y) {
  // Texture bytes are generated row-major for the full rect so clipped
  // renders stay consistent with unclipped ones.
  Xorshift64Star rng(mover.texture_seed);
  for (int ty = 0; ty < mover.height; ++ty) {
    for (int tx = 0; tx < mover.width; ++tx) {
      const std::uint8_t value = rng.next_byte();
      const int x = pos_x + tx;
      const int y = pos_y + ty;
      if (x < 0 || x >= luma.width || y < 0 || y >= luma.height) continue;
      luma.at(x, y) = value;
    }
  }
}

}  // namespace

Frame synth_frame(const SynthSpec& spec, std::int64_t time_num,
                  std::int64_t time_den) {
  if (spec.width < 1 || spec.height < 1)
    throw std::invalid_argument("synth_frame: dimensions must be positive");
  if (time_den < 1)
    throw std::invalid_argument("synth_frame: time denominator must be positive");
  Frame frame = make_frame(spec.width, spec.height, spec.color_mode, 128);
  fill_background(frame.luma, spec);
  for (const MoverSpec& mover : spec.movers) {
    if (mover.width < 1 || mover.height < 1)
      throw std::invalid_argument("synth_frame: mover dimensions must be positive");
    blit_mover(frame.luma, mover,
               displaced(mover.start_x, mover.vel_x, time_num, time_den),
               displaced(mover.start_y, mover.vel_y, time_num, time_den));
  }
  return frame;
}

std::vector<Frame> synth_sequence(const SynthSpec& spec) {
  if (spec.frame_count < 1)
    throw std::invalid_argument("synth_sequence: frame count must be positive");
  std::vector<Frame> frames;
  frames.reserve(static_cast<std::size_t>(spec.frame_count));
  for (int t = 0; t < spec.frame_count; ++t)
    frames.push_back(synth_frame(spec, t));
  return frames;
}

}  // namespace fruc
