#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fruc/block_matching.hpp"
#include "fruc/mv_smoothing.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace fruc;

namespace {

// Truncated-neighborhood smoothing spelled out per block; the reference
// for smooth_field's vector selection.
MotionVector reference_smoothed(const MotionField& field, int c, int r) {
  std::vector<MotionVector> candidates{field.vec(c, r)};
  for (int dr = -1; dr <= 1; ++dr)
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      if (r + dr < 0 || r + dr >= field.rows) continue;
      if (c + dc < 0 || c + dc >= field.cols) continue;
      candidates.push_back(field.vec(c + dc, r + dr));
    }
  return oracle::vector_median(candidates);
}

MotionField random_bilateral_field(int cols, int rows, int block, int range,
                                   std::uint64_t seed) {
  MotionField field;
  field.anchor = FieldAnchor::interpolated_frame;
  field.block_size = block;
  field.cols = cols;
  field.rows = rows;
  Xorshift64Star rng(seed);
  for (int i = 0; i < cols * rows; ++i) {
    field.vectors.push_back({rng.next_in(-range, range), rng.next_in(-range, range)});
    field.costs.push_back(0);
  }
  return field;
}

}  // namespace

TEST_CASE("vector_median examples") {
  std::vector<MotionVector> constant(9, {3, 4});
  CHECK(vector_median(constant) == MotionVector{3, 4});

  std::vector<MotionVector> outlier(8, {0, 0});
  outlier.push_back({8, 8});
  CHECK(vector_median(outlier) == MotionVector{0, 0});
  CHECK(vector_median(outlier) == oracle::vector_median(outlier));

  const std::vector<MotionVector> triple{{0, 0}, {1, 0}, {0, 1}};
  CHECK(vector_median(triple) == MotionVector{0, 0});
  CHECK(vector_median(triple) == oracle::vector_median(triple));

  CHECK_THROWS_AS(vector_median({}), std::invalid_argument);
}

TEST_CASE("vector_median matches the brute-force oracle on random sets") {
  Xorshift64Star rng(21);
  for (int i = 0; i < 200; ++i) {
    std::vector<MotionVector> candidates;
    const int n = rng.next_in(1, 9);
    for (int j = 0; j < n; ++j)
      candidates.push_back({rng.next_in(-8, 8), rng.next_in(-8, 8)});
    CHECK(vector_median(candidates) == oracle::vector_median(candidates));
  }
}

TEST_CASE("vector_median returns a member of the input") {
  Xorshift64Star rng(22);
  for (int i = 0; i < 100; ++i) {
    std::vector<MotionVector> candidates;
    for (int j = 0; j < 9; ++j)
      candidates.push_back({rng.next_in(-8, 8), rng.next_in(-8, 8)});
    const MotionVector median = vector_median(candidates);
    CHECK(std::find(candidates.begin(), candidates.end(), median) !=
          candidates.end());
  }
}

TEST_CASE("smooth_field keeps constant fields") {
  const Frame prev = testutil::random_frame(64, 48, 23);
  const Frame next = testutil::random_frame(64, 48, 24);
  MotionField field = random_bilateral_field(4, 3, 16, 0, 1);
  for (MotionVector& mv : field.vectors) mv = {2, -1};
  const MotionField smoothed = smooth_field(field, prev, next);
  CHECK(smoothed.vectors == field.vectors);
  // costs follow the vectors
  for (int r = 0; r < field.rows; ++r)
    for (int c = 0; c < field.cols; ++c)
      CHECK(smoothed.cost(c, r) ==
            block_cost_along(prev, next, c * 16, r * 16, {2, -1}, 16));
}

TEST_CASE("smooth_field replaces an interior outlier") {
  const Frame prev = testutil::random_frame(64, 48, 25);
  const Frame next = testutil::random_frame(64, 48, 26);
  MotionField field = random_bilateral_field(4, 3, 16, 0, 2);
  for (MotionVector& mv : field.vectors) mv = {1, 1};
  field.vec(1, 1) = {-7, 5};
  const MotionField smoothed = smooth_field(field, prev, next);
  CHECK(smoothed.vec(1, 1) == MotionVector{1, 1});
}

TEST_CASE("smooth_field leaves a 1x1 field alone") {
  const Frame prev = testutil::random_frame(16, 16, 27);
  const Frame next = testutil::random_frame(16, 16, 28);
  MotionField field = random_bilateral_field(1, 1, 16, 4, 3);
  const MotionField smoothed = smooth_field(field, prev, next);
  CHECK(smoothed.vectors == field.vectors);
}

TEST_CASE("smooth_field per-block choice matches the reference, borders included") {
  const Frame prev = testutil::random_frame(80, 64, 29);
  const Frame next = testutil::random_frame(80, 64, 30);
  for (std::uint64_t seed = 10; seed < 15; ++seed) {
    const MotionField field = random_bilateral_field(5, 4, 16, 8, seed);
    const MotionField smoothed = smooth_field(field, prev, next);
    for (int r = 0; r < field.rows; ++r)
      for (int c = 0; c < field.cols; ++c)
        CHECK(smoothed.vec(c, r) == reference_smoothed(field, c, r));
  }
}

TEST_CASE("smoothed vectors stay in range and come from the neighborhood") {
  const Frame prev = testutil::random_frame(96, 64, 31);
  const Frame next = testutil::random_frame(96, 64, 32);
  const int range = 8;
  const MotionField field = random_bilateral_field(6, 4, 16, range, 4);
  const MotionField smoothed = smooth_field(field, prev, next);
  for (int r = 0; r < field.rows; ++r)
    for (int c = 0; c < field.cols; ++c) {
      const MotionVector mv = smoothed.vec(c, r);
      CHECK(std::abs(mv.dx) <= range);
      CHECK(std::abs(mv.dy) <= range);
      bool member = false;
      for (int dr = -1; dr <= 1; ++dr)
        for (int dc = -1; dc <= 1; ++dc) {
          if (r + dr < 0 || r + dr >= field.rows) continue;
          if (c + dc < 0 || c + dc >= field.cols) continue;
          member |= field.vec(c + dc, r + dr) == mv;
        }
      CHECK(member);
    }
}

TEST_CASE("smooth_field recomputes costs along the smoothed vectors") {
  const Frame prev = testutil::random_frame(64, 64, 33);
  const Frame next = testutil::random_frame(64, 64, 34);
  const MotionField field = random_bilateral_field(4, 4, 16, 8, 5);
  const MotionField smoothed = smooth_field(field, prev, next);
  for (int r = 0; r < field.rows; ++r)
    for (int c = 0; c < field.cols; ++c)
      CHECK(smoothed.cost(c, r) == block_cost_along(prev, next, c * 16, r * 16,
                                                    smoothed.vec(c, r), 16));
}

TEST_CASE("smooth_field rejects unilateral fields") {
  const Frame prev = testutil::random_frame(64, 64, 35);
  MotionField field = random_bilateral_field(4, 4, 16, 8, 6);
  field.anchor = FieldAnchor::previous_frame;
  CHECK_THROWS_AS(smooth_field(field, prev, prev), std::invalid_argument);
}
