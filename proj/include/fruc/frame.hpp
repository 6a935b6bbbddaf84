#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fruc {

enum class ColorMode { luma_only, yuv420 };

struct Rational {
  int num = 0;
  int den = 1;
  bool operator==(const Rational&) const = default;
};

// Stream-level metadata. frame_count stays empty while the length of a
// stream is not yet known.
struct SequenceMeta {
  int width = 0;
  int height = 0;
  Rational frame_rate{30, 1};
  ColorMode color_mode = ColorMode::luma_only;
  std::optional<std::int64_t> frame_count;
  bool operator==(const SequenceMeta&) const = default;
};

// Row-major 8-bit sample plane.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> samples;

  bool empty() const { return samples.empty(); }

  std::uint8_t at(int x, int y) const {
    return samples[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return samples[static_cast<std::size_t>(y) * width + x];
  }

  // Edge-replicated read, valid for any coordinate.
  std::uint8_t at_clamped(int x, int y) const {
    x = x < 0 ? 0 : (x >= width ? width - 1 : x);
    y = y < 0 ? 0 : (y >= height ? height - 1 : y);
    return at(x, y);
  }

  const std::uint8_t* row(int y) const {
    return samples.data() + static_cast<std::size_t>(y) * width;
  }
  std::uint8_t* row(int y) {
    return samples.data() + static_cast<std::size_t>(y) * width;
  }

  bool operator==(const Plane&) const = default;
};

Plane make_plane(int width, int height, std::uint8_t fill = 0);

// One decoded picture. Chroma planes are present exactly for 4:2:0 content
// and hold (width/2) x (height/2) samples each.
struct Frame {
  Plane luma;
  Plane chroma_u;
  Plane chroma_v;

  int width() const { return luma.width; }
  int height() const { return luma.height; }
  bool has_chroma() const { return !chroma_u.empty(); }
  ColorMode color_mode() const {
    return has_chroma() ? ColorMode::yuv420 : ColorMode::luma_only;
  }

  bool operator==(const Frame&) const = default;
};

Frame make_frame(int width, int height, ColorMode mode, std::uint8_t fill = 0);

// Grows the frame to the smallest dimensions that are multiples of n,
// replicating the nearest edge sample into the new region. n >= 1; 4:2:0
// frames additionally require the padded dimensions to stay even.
Frame pad_to_multiple(const Frame& frame, int n);

// Keeps the top-left width x height region. Inverse of pad_to_multiple at
// the original dimensions.
Frame crop(const Frame& frame, int width, int height);

}  // namespace fruc
