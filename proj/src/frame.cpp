#include "fruc/frame.hpp"

#include <stdexcept>
#include <string>

namespace fruc {

namespace {

int round_up(int value, int multiple) {
  return ((value + multiple - 1) / multiple) * multiple;
}

Plane pad_plane(const Plane& src, int width, int height) {
  Plane out = make_plane(width, height);
  for (int y = 0; y < height; ++y) {
    const std::uint8_t* srow = src.row(y < src.height ? y : src.height - 1);
    std::uint8_t* drow = out.row(y);
    for (int x = 0; x < src.width; ++x) drow[x] = srow[x];
    for (int x = src.width; x < width; ++x) drow[x] = srow[src.width - 1];
  }
  return out;
}

Plane crop_plane(const Plane& src, int width, int height) {
  Plane out = make_plane(width, height);
  for (int y = 0; y < height; ++y) {
    const std::uint8_t* srow = src.row(y);
    std::uint8_t* drow = out.row(y);
    for (int x = 0; x < width; ++x) drow[x] = srow[x];
  }
  return out;
}

}  // namespace

Plane make_plane(int width, int height, std::uint8_t fill) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("plane dimensions must be positive");
  Plane p;
  p.width = width;
  p.height = height;
  p.samples.assign(static_cast<std::size_t>(width) * height, fill);
  return p;
}

Frame make_frame(int width, int height, ColorMode mode, std::uint8_t fill) {
  Frame f;
  f.luma = make_plane(width, height, fill);
  if (mode == ColorMode::yuv420) {
    if (width % 2 != 0 || height % 2 != 0)
      throw std::invalid_argument("4:2:0 frames require even dimensions");
    f.chroma_u = make_plane(width / 2, height / 2, fill);
    f.chroma_v = make_plane(width / 2, height / 2, fill);
  }
  return f;
}

Frame pad_to_multiple(const Frame& frame, int n) {
  if (n < 1) throw std::invalid_argument("pad_to_multiple: n must be >= 1");
  const int width = round_up(frame.width(), n);
  const int height = round_up(frame.height(), n);
  if (width == frame.width() && height == frame.height()) return frame;
  if (frame.has_chroma() && (width % 2 != 0 || height % 2 != 0))
    throw std::invalid_argument(
        "pad_to_multiple: padded 4:2:0 dimensions must stay even");
  Frame out;
  out.luma = pad_plane(frame.luma, width, height);
  if (frame.has_chroma()) {
    out.chroma_u = pad_plane(frame.chroma_u, width / 2, height / 2);
    out.chroma_v = pad_plane(frame.chroma_v, width / 2, height / 2);
  }
  return out;
}

Frame crop(const Frame& frame, int width, int height) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("crop: target dimensions must be positive");
  if (width > frame.width() || height > frame.height())
    throw std::invalid_argument("crop: target " + std::to_string(width) + "x" +
                                std::to_string(height) +
                                " exceeds current dimensions");
  if (width == frame.width() && height == frame.height()) return frame;
  if (frame.has_chroma() && (width % 2 != 0 || height % 2 != 0))
    throw std::invalid_argument("crop: 4:2:0 target dimensions must be even");
  Frame out;
  out.luma = crop_plane(frame.luma, width, height);
  if (frame.has_chroma()) {
    out.chroma_u = crop_plane(frame.chroma_u, width / 2, height / 2);
    out.chroma_v = crop_plane(frame.chroma_v, width / 2, height / 2);
  }
  return out;
}

}  // namespace fruc
