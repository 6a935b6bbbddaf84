#include "fruc/block_matching.hpp"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fruc {

namespace {

// Source plane with a replicated border so candidate reads inside the
// search window never branch on bounds.
struct BorderedPlane {
  int width = 0;
  int height = 0;
  int border = 0;
  int stride = 0;
  std::vector<std::uint8_t> data;

  const std::uint8_t* pixel(int x, int y) const {
    return data.data() +
           static_cast<std::size_t>(y + border) * stride + (x + border);
  }
};

BorderedPlane make_bordered(const Plane& src, int border) {
  BorderedPlane out;
  out.width = src.width;
  out.height = src.height;
  out.border = border;
  out.stride = src.width + 2 * border;
  out.data.resize(static_cast<std::size_t>(out.stride) * (src.height + 2 * border));
  for (int y = -border; y < src.height + border; ++y) {
    const int sy = y < 0 ? 0 : (y >= src.height ? src.height - 1 : y);
    const std::uint8_t* srow = src.row(sy);
    std::uint8_t* drow = out.data.data() + static_cast<std::size_t>(y + border) * out.stride;
    std::memset(drow, srow[0], static_cast<std::size_t>(border));
    std::memcpy(drow + border, srow, static_cast<std::size_t>(src.width));
    std::memset(drow + border + src.width, srow[src.width - 1],
                static_cast<std::size_t>(border));
  }
  return out;
}

template <int W>
std::uint32_t sad_rows_fixed(const std::uint8_t* a, int stride_a,
                             const std::uint8_t* b, int stride_b, int h) {
  std::uint32_t total = 0;
  for (int y = 0; y < h; ++y) {
    std::uint32_t row = 0;
    for (int x = 0; x < W; ++x)
      row += static_cast<std::uint32_t>(std::abs(int(a[x]) - int(b[x])));
    total += row;
    a += stride_a;
    b += stride_b;
  }
  return total;
}

std::uint32_t sad_rows(const std::uint8_t* a, int stride_a,
                       const std::uint8_t* b, int stride_b, int w, int h) {
  switch (w) {
    case 8:
      return sad_rows_fixed<8>(a, stride_a, b, stride_b, h);
    case 16:
      return sad_rows_fixed<16>(a, stride_a, b, stride_b, h);
    default:
      break;
  }
  std::uint32_t total = 0;
  for (int y = 0; y < h; ++y) {
    std::uint32_t row = 0;
    for (int x = 0; x < w; ++x)
      row += static_cast<std::uint32_t>(std::abs(int(a[x]) - int(b[x])));
    total += row;
    a += stride_a;
    b += stride_b;
  }
  return total;
}

void check_me_inputs(const Frame& prev, const Frame& next, int block, int search) {
  if (prev.width() != next.width() || prev.height() != next.height())
    throw std::invalid_argument("motion estimation requires equally sized frames");
  if (block < 1 || search < 1)
    throw std::invalid_argument("block size and search range must be >= 1");
  if (prev.width() % block != 0 || prev.height() % block != 0)
    throw std::invalid_argument("frame dimensions must be multiples of the block size");
}

MotionField make_field(FieldAnchor anchor, int block, int width, int height) {
  MotionField field;
  field.anchor = anchor;
  field.block_size = block;
  field.cols = width / block;
  field.rows = height / block;
  field.vectors.resize(static_cast<std::size_t>(field.cols) * field.rows);
  field.costs.resize(field.vectors.size());
  return field;
}

// Anchor blocks are read in-bounds; target reads go through the border.
MotionField unilateral_search(const Plane& anchor, const Plane& target,
                              int block, int search, FieldAnchor tag) {
  MotionField field = make_field(tag, block, anchor.width, anchor.height);
  const BorderedPlane tgt = make_bordered(target, search);
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      const int x0 = c * block;
      const int y0 = r * block;
      const std::uint8_t* a = anchor.row(y0) + x0;
      std::uint32_t best_cost = std::numeric_limits<std::uint32_t>::max();
      int best_r2 = std::numeric_limits<int>::max();
      MotionVector best;
      for (int dy = -search; dy <= search; ++dy) {
        for (int dx = -search; dx <= search; ++dx) {
          const std::uint32_t cost = sad_rows(a, anchor.width,
                                              tgt.pixel(x0 + dx, y0 + dy),
                                              tgt.stride, block, block);
          const int r2 = dx * dx + dy * dy;
          if (cost < best_cost || (cost == best_cost && r2 < best_r2)) {
            best_cost = cost;
            best_r2 = r2;
            best = {dx, dy};
          }
        }
      }
      field.vec(c, r) = best;
      field.cost(c, r) = best_cost;
    }
  }
  return field;
}

}  // namespace

void FrucConfig::validate() const {
  if (uni_block < 1 || uni_search < 1 || bi_block < 1 || bi_search < 1)
    throw std::invalid_argument("block sizes and search ranges must be >= 1");
  if (obmc_margin < 0 || 2 * obmc_margin >= bi_block)
    throw std::invalid_argument("obmc margin must be less than half the bilateral block size");
}

int FrucConfig::pad_multiple() const { return std::lcm(uni_block, bi_block); }

std::uint32_t sad(const Plane& a, int ax, int ay, const Plane& b, int bx,
                  int by, int block_w, int block_h) {
  if (block_w < 1 || block_h < 1)
    throw std::invalid_argument("sad: block dimensions must be positive");
  std::uint32_t total = 0;
  for (int i = 0; i < block_h; ++i)
    for (int j = 0; j < block_w; ++j)
      total += static_cast<std::uint32_t>(
          std::abs(int(a.at_clamped(ax + j, ay + i)) -
                   int(b.at_clamped(bx + j, by + i))));
  return total;
}

MotionField bilateral_me(const Frame& prev, const Frame& next,
                         const FrucConfig& cfg) {
  check_me_inputs(prev, next, cfg.bi_block, cfg.bi_search);
  const int block = cfg.bi_block;
  const int search = cfg.bi_search;
  MotionField field = make_field(FieldAnchor::interpolated_frame, block,
                                 prev.width(), prev.height());
  const BorderedPlane p = make_bordered(prev.luma, search);
  const BorderedPlane n = make_bordered(next.luma, search);
  for (int r = 0; r < field.rows; ++r) {
    for (int c = 0; c < field.cols; ++c) {
      const int x0 = c * block;
      const int y0 = r * block;
      std::uint32_t best_cost = std::numeric_limits<std::uint32_t>::max();
      int best_r2 = std::numeric_limits<int>::max();
      MotionVector best;
      for (int dy = -search; dy <= search; ++dy) {
        for (int dx = -search; dx <= search; ++dx) {
          const std::uint32_t cost =
              sad_rows(p.pixel(x0 + dx, y0 + dy), p.stride,
                       n.pixel(x0 - dx, y0 - dy), n.stride, block, block);
          const int r2 = dx * dx + dy * dy;
          if (cost < best_cost || (cost == best_cost && r2 < best_r2)) {
            best_cost = cost;
            best_r2 = r2;
            best = {dx, dy};
          }
        }
      }
      field.vec(c, r) = best;
      field.cost(c, r) = best_cost;
    }
  }
  return field;
}

MotionField forward_me(const Frame& prev, const Frame& next,
                       const FrucConfig& cfg) {
  check_me_inputs(prev, next, cfg.uni_block, cfg.uni_search);
  return unilateral_search(prev.luma, next.luma, cfg.uni_block, cfg.uni_search,
                           FieldAnchor::previous_frame);
}

MotionField backward_me(const Frame& prev, const Frame& next,
                        const FrucConfig& cfg) {
  check_me_inputs(prev, next, cfg.uni_block, cfg.uni_search);
  return unilateral_search(next.luma, prev.luma, cfg.uni_block, cfg.uni_search,
                           FieldAnchor::next_frame);
}

std::uint32_t block_cost_along(const Frame& prev, const Frame& next,
                               int origin_x, int origin_y, MotionVector mv,
                               int block_size) {
  return sad(prev.luma, origin_x + mv.dx, origin_y + mv.dy, next.luma,
             origin_x - mv.dx, origin_y - mv.dy, block_size, block_size);
}

std::string dump_motion_field(const MotionField& field) {
  std::ostringstream out;
  for (int r = 0; r < field.rows; ++r)
    for (int c = 0; c < field.cols; ++c)
      out << c << ' ' << r << ' ' << field.vec(c, r).dx << ' '
          << field.vec(c, r).dy << ' ' << field.cost(c, r) << '\n';
  return out.str();
}

}  // namespace fruc
