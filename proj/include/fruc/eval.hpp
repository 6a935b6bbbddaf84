#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fruc/block_matching.hpp"
#include "fruc/frame.hpp"
#include "fruc/pipeline.hpp"

namespace fruc {

// Infinite per-frame values enter the report average at this cap so static
// content keeps the mean finite.
inline constexpr double kPsnrAverageCap = 100.0;

// Luma-only, full frame. Identical frames give +infinity.
double psnr(const Frame& reference, const Frame& test);

struct PsnrReport {
  std::string sequence_name;
  Mode mode = Mode::proposed;
  struct Entry {
    int frame_index = 0;  // 1-based index of the reconstructed frame
    double psnr_db = 0.0; // may be +infinity
  };
  std::vector<Entry> per_frame;
  double average_db = 0.0;
};

// Drops the odd frames of the sequence, re-synthesizes them from the even
// neighbors, and scores each against the withheld original.
PsnrReport run_protocol(std::span<const Frame> frames, const FrucConfig& cfg,
                        std::string sequence_name,
                        std::vector<StageArtifacts>* artifacts = nullptr);

// Header "frame,psnr_db", one row per reconstructed frame, final row
// "average,<value>". Two fractional digits; infinite entries print "inf".
void write_csv(const PsnrReport& report, std::ostream& out);

const char* mode_name(Mode mode);

}  // namespace fruc
