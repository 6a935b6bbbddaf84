#include "fruc/eval.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "fruc/pipeline.hpp"

namespace fruc {

namespace {

std::string format_db(double value) {
  if (std::isinf(value)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

}  // namespace

double psnr(const Frame& reference, const Frame& test) {
  if (reference.width() != test.width() || reference.height() != test.height())
    throw std::invalid_argument("psnr: frame dimensions differ");
  std::int64_t sq = 0;
  const std::size_t total = reference.luma.samples.size();
  for (std::size_t i = 0; i < total; ++i) {
    const int d = int(reference.luma.samples[i]) - int(test.luma.samples[i]);
    sq += d * d;
  }
  if (sq == 0) return std::numeric_limits<double>::infinity();
  const double mse = static_cast<double>(sq) / static_cast<double>(total);
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

PsnrReport run_protocol(std::span<const Frame> frames, const FrucConfig& cfg,
                        std::string sequence_name,
                        std::vector<StageArtifacts>* artifacts) {
  const auto indices = odd_reconstruction_indices(static_cast<std::int64_t>(frames.size()));
  const auto reconstructed = reconstruct_odd(frames, cfg, artifacts);

  PsnrReport report;
  report.sequence_name = std::move(sequence_name);
  report.mode = cfg.mode;
  double sum = 0.0;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const double value = psnr(frames[static_cast<std::size_t>(indices[i]) - 1],
                              reconstructed[i]);
    report.per_frame.push_back({indices[i], value});
    sum += std::isinf(value) ? kPsnrAverageCap : value;
  }
  report.average_db = sum / static_cast<double>(indices.size());
  return report;
}

void write_csv(const PsnrReport& report, std::ostream& out) {
  out << "frame,psnr_db\n";
  for (const PsnrReport::Entry& entry : report.per_frame)
    out << entry.frame_index << ',' << format_db(entry.psnr_db) << '\n';
  out << "average," << format_db(report.average_db) << '\n';
}

const char* mode_name(Mode mode) {
  switch (mode) {
    case Mode::unilateral:
      return "unilateral";
    case Mode::bilateral:
      return "bilateral";
    case Mode::proposed:
      return "proposed";
  }
  return "unknown";
}

}  // namespace fruc
