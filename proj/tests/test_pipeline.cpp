#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fruc/eval.hpp"
#include "fruc/pipeline.hpp"
#include "test_util.hpp"

using namespace fruc;

namespace {

std::vector<Frame> tiny_sequence(int count, std::uint64_t seed) {
  std::vector<Frame> frames;
  const Frame base = testutil::random_frame(16, 16, seed);
  for (int i = 0; i < count; ++i)
    frames.push_back(testutil::translate_frame(base, i, 0));
  return frames;
}

}  // namespace

TEST_CASE("interpolating a frame with itself returns it exactly") {
  for (ColorMode mode : {ColorMode::luma_only, ColorMode::yuv420}) {
    const Frame f = testutil::random_frame(48, 36, 70, mode);
    for (Mode m : {Mode::unilateral, Mode::bilateral, Mode::proposed}) {
      FrucConfig cfg;
      cfg.mode = m;
      CHECK(interpolate_between(f, f, cfg) == f);
    }
  }
}

TEST_CASE("global translation reconstructs the analytic mid-shift") {
  const Frame prev = testutil::random_frame(96, 80, 71);
  const Frame next = testutil::translate_frame(prev, 2, 2);
  const Frame truth = testutil::translate_frame(prev, 1, 1);
  FrucConfig cfg;
  cfg.mode = Mode::proposed;
  const Frame mid = interpolate_between(prev, next, cfg);
  CHECK(testutil::psnr_excluding_border(mid.luma, truth.luma, 16) >= 40.0);
}

TEST_CASE("mismatched references are rejected") {
  FrucConfig cfg;
  const Frame a = testutil::random_frame(32, 32, 72);
  const Frame b = testutil::random_frame(48, 32, 73);
  CHECK_THROWS_AS(interpolate_between(a, b, cfg), std::invalid_argument);
  const Frame c = testutil::random_frame(32, 32, 74, ColorMode::yuv420);
  CHECK_THROWS_AS(interpolate_between(a, c, cfg), std::invalid_argument);
}

TEST_CASE("double_rate length and pass-through") {
  FrucConfig cfg;
  SUBCASE("two frames make three") {
    const auto frames = tiny_sequence(2, 80);
    const auto doubled = double_rate(frames, cfg);
    CHECK(doubled.size() == 3);
    CHECK(doubled[0] == frames[0]);
    CHECK(doubled[2] == frames[1]);
  }
  SUBCASE("static input stays static") {
    const Frame f = testutil::random_frame(16, 16, 81);
    const std::vector<Frame> frames(5, f);
    const auto doubled = double_rate(frames, cfg);
    CHECK(doubled.size() == 9);
    for (const Frame& out : doubled) CHECK(out == f);
  }
  SUBCASE("51 frames make 101") {
    const auto frames = tiny_sequence(51, 82);
    const auto doubled = double_rate(frames, cfg);
    CHECK(doubled.size() == 101);
    for (std::size_t i = 0; i < frames.size(); ++i)
      CHECK(doubled[2 * i] == frames[i]);
  }
  SUBCASE("fewer than two frames is an error") {
    const auto frames = tiny_sequence(1, 83);
    CHECK_THROWS_AS(double_rate(frames, cfg), std::invalid_argument);
  }
}

TEST_CASE("double_rate_meta doubles the rate and the known count") {
  SequenceMeta meta{352, 288, {30, 1}, ColorMode::yuv420, 51};
  const SequenceMeta doubled = double_rate_meta(meta);
  CHECK(doubled.frame_rate == Rational{60, 1});
  CHECK(doubled.frame_count == 101);
}

TEST_CASE("odd reconstruction indices") {
  CHECK(odd_reconstruction_indices(102).size() == 50);
  CHECK(odd_reconstruction_indices(102).front() == 3);
  CHECK(odd_reconstruction_indices(102).back() == 101);
  CHECK(odd_reconstruction_indices(90).size() == 44);
  CHECK(odd_reconstruction_indices(3) == std::vector<int>{3});
}

TEST_CASE("reconstruct_odd frame counts") {
  FrucConfig cfg;
  CHECK(reconstruct_odd(tiny_sequence(102, 84), cfg).size() == 50);
  CHECK(reconstruct_odd(tiny_sequence(90, 85), cfg).size() == 44);

  const Frame f = testutil::random_frame(16, 16, 86);
  const std::vector<Frame> three(3, f);
  const auto rebuilt = reconstruct_odd(three, cfg);
  CHECK(rebuilt.size() == 1);
  CHECK(rebuilt[0] == f);

  CHECK_THROWS_AS(reconstruct_odd(tiny_sequence(2, 87), cfg),
                  std::invalid_argument);
}

TEST_CASE("reconstruct_odd never reads the withheld odd frames") {
  FrucConfig cfg;
  cfg.mode = Mode::proposed;
  const auto frames = tiny_sequence(12, 88);
  auto corrupted = frames;
  for (std::size_t k = 3; k <= corrupted.size(); k += 2)
    corrupted[k - 1] = testutil::random_frame(16, 16, 999 + k);
  CHECK(reconstruct_odd(frames, cfg) == reconstruct_odd(corrupted, cfg));
}

TEST_CASE("repeated runs are bit identical") {
  FrucConfig cfg;
  const auto frames = tiny_sequence(6, 89);
  CHECK(double_rate(frames, cfg) == double_rate(frames, cfg));
}

TEST_CASE("all modes agree exactly on static sequences") {
  const Frame f = testutil::random_frame(32, 32, 90);
  FrucConfig uni, bi, prop;
  uni.mode = Mode::unilateral;
  bi.mode = Mode::bilateral;
  prop.mode = Mode::proposed;
  const Frame a = interpolate_between(f, f, uni);
  const Frame b = interpolate_between(f, f, bi);
  const Frame c = interpolate_between(f, f, prop);
  CHECK(a == b);
  CHECK(b == c);
  CHECK(c == f);
}

TEST_CASE("artifacts expose the computed fields and residual holes") {
  FrucConfig cfg;
  cfg.mode = Mode::proposed;
  const Frame prev = testutil::random_frame(48, 32, 91);
  const Frame next = testutil::translate_frame(prev, 3, 1);
  StageArtifacts art;
  interpolate_between(prev, next, cfg, &art);
  CHECK(art.bilateral_field.block_size == cfg.bi_block);
  REQUIRE(art.forward_field.has_value());
  CHECK(art.forward_field->block_size == cfg.uni_block);
  REQUIRE(art.residual_hole_mask.has_value());

  cfg.mode = Mode::bilateral;
  StageArtifacts bi_art;
  interpolate_between(prev, next, cfg, &bi_art);
  CHECK(!bi_art.forward_field.has_value());
  CHECK(!bi_art.residual_hole_mask.has_value());
}
