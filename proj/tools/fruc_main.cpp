#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fruc/eval.hpp"
#include "fruc/interpolation.hpp"
#include "fruc/pipeline.hpp"
#include "fruc/synth.hpp"
#include "fruc/video_io.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;

long parse_long(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size())
    throw std::invalid_argument("malformed " + what + ": '" + text + "'");
  return value;
}

// "WxH"
std::pair<int, int> parse_size(const std::string& text) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos)
    throw std::invalid_argument("expected WxH, got '" + text + "'");
  return {static_cast<int>(parse_long(text.substr(0, x), "width")),
          static_cast<int>(parse_long(text.substr(x + 1), "height"))};
}

// "num:den" or "num"
fruc::Rational parse_fps(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    return {static_cast<int>(parse_long(text, "frame rate")), 1};
  return {static_cast<int>(parse_long(text.substr(0, colon), "frame rate")),
          static_cast<int>(parse_long(text.substr(colon + 1), "frame rate"))};
}

struct InputOptions {
  std::string path;
  std::string raw_size;            // empty = Y4M input
  std::string raw_format = "420";  // 420 | mono
  std::string raw_fps = "30:1";
};

std::vector<fruc::Frame> load_input(const InputOptions& in,
                                    fruc::SequenceMeta& meta) {
  std::ifstream file(in.path, std::ios::binary);
  if (!file) throw fruc::IoError("cannot open input file: " + in.path);
  std::vector<fruc::Frame> frames;
  if (in.raw_size.empty()) {
    fruc::Y4mReader reader(file);
    meta = reader.meta();
    frames = fruc::read_all(reader);
  } else {
    const auto [width, height] = parse_size(in.raw_size);
    fruc::ColorMode mode;
    if (in.raw_format == "420")
      mode = fruc::ColorMode::yuv420;
    else if (in.raw_format == "mono")
      mode = fruc::ColorMode::luma_only;
    else
      throw std::invalid_argument("unknown raw format: " + in.raw_format);
    fruc::RawYuvReader reader(file, width, height, mode);
    meta = reader.meta();
    meta.frame_rate = parse_fps(in.raw_fps);
    frames = fruc::read_all(reader);
  }
  meta.frame_count = static_cast<std::int64_t>(frames.size());
  return frames;
}

void write_output(const std::string& path, const fruc::SequenceMeta& meta,
                  std::span<const fruc::Frame> frames) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw fruc::IoError("cannot open output file: " + path);
  fruc::write_y4m(file, meta, frames);
  if (!file) throw fruc::IoError("write failed: " + path);
}

std::string indexed_name(const std::string& prefix, int index,
                         const std::string& suffix) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d", index);
  return prefix + buf + suffix;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw fruc::IoError("cannot open dump file: " + path);
  file << text;
}

// One text dump per computed motion field plus the residual hole mask of
// the unilateral join. index identifies the pair within the run.
void dump_artifacts(const fruc::StageArtifacts& art, int index,
                    const std::string& mv_prefix,
                    const std::string& holes_prefix) {
  if (!mv_prefix.empty()) {
    write_text_file(indexed_name(mv_prefix, index, "_bilateral.txt"),
                    fruc::dump_motion_field(art.bilateral_field));
    if (art.forward_field)
      write_text_file(indexed_name(mv_prefix, index, "_forward.txt"),
                      fruc::dump_motion_field(*art.forward_field));
    if (art.backward_field)
      write_text_file(indexed_name(mv_prefix, index, "_backward.txt"),
                      fruc::dump_motion_field(*art.backward_field));
  }
  if (!holes_prefix.empty() && art.residual_hole_mask) {
    const std::string path = indexed_name(holes_prefix, index, "_holes.pgm");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw fruc::IoError("cannot open dump file: " + path);
    fruc::write_pgm(file, *art.residual_hole_mask);
  }
}

fruc::SynthSpec parse_synth_spec(const std::vector<std::string>& args) {
  fruc::SynthSpec spec;
  spec.width = 352;
  spec.height = 288;
  spec.frame_count = 30;
  for (const std::string& arg : args) {
    const std::size_t eq = arg.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("spec entry needs key=value: '" + arg + "'");
    const std::string key = arg.substr(0, eq);
    const std::string value = arg.substr(eq + 1);
    if (key == "width") {
      spec.width = static_cast<int>(parse_long(value, "width"));
    } else if (key == "height") {
      spec.height = static_cast<int>(parse_long(value, "height"));
    } else if (key == "frames") {
      spec.frame_count = static_cast<int>(parse_long(value, "frames"));
    } else if (key == "color") {
      if (value == "mono")
        spec.color_mode = fruc::ColorMode::luma_only;
      else if (value == "420")
        spec.color_mode = fruc::ColorMode::yuv420;
      else
        throw std::invalid_argument("color must be mono or 420");
    } else if (key == "background") {
      const std::size_t colon = value.find(':');
      const std::string kind = value.substr(0, colon);
      const std::string param =
          colon == std::string::npos ? "" : value.substr(colon + 1);
      if (kind == "flat") {
        spec.noise_background = false;
        spec.flat_value =
            static_cast<std::uint8_t>(parse_long(param, "flat value"));
      } else if (kind == "noise") {
        spec.noise_background = true;
        spec.noise_seed =
            static_cast<std::uint64_t>(parse_long(param, "noise seed"));
      } else {
        throw std::invalid_argument("background must be flat:<value> or noise:<seed>");
      }
    } else if (key == "mover") {
      // mover=seed:7,rect:48x32,at:20:30,vel:2:-1
      fruc::MoverSpec mover;
      std::stringstream parts(value);
      std::string part;
      while (std::getline(parts, part, ',')) {
        const std::size_t colon = part.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("mover entry needs name:value, got '" + part + "'");
        const std::string name = part.substr(0, colon);
        const std::string rest = part.substr(colon + 1);
        if (name == "seed") {
          mover.texture_seed = static_cast<std::uint64_t>(parse_long(rest, "mover seed"));
        } else if (name == "rect") {
          const auto [w, h] = parse_size(rest);
          mover.width = w;
          mover.height = h;
        } else if (name == "at") {
          const std::size_t sep = rest.find(':');
          if (sep == std::string::npos)
            throw std::invalid_argument("mover at needs X:Y");
          mover.start_x = static_cast<int>(parse_long(rest.substr(0, sep), "mover x"));
          mover.start_y = static_cast<int>(parse_long(rest.substr(sep + 1), "mover y"));
        } else if (name == "vel") {
          const std::size_t sep = rest.find(':');
          if (sep == std::string::npos)
            throw std::invalid_argument("mover vel needs VX:VY");
          mover.vel_x = static_cast<int>(parse_long(rest.substr(0, sep), "mover vx"));
          mover.vel_y = static_cast<int>(parse_long(rest.substr(sep + 1), "mover vy"));
        } else {
          throw std::invalid_argument("unknown mover field: " + name);
        }
      }
      if (mover.width < 1 || mover.height < 1)
        throw std::invalid_argument("mover needs rect:WxH");
      spec.movers.push_back(mover);
    } else {
      throw std::invalid_argument("unknown spec key: " + key);
    }
  }
  return spec;
}

const std::map<std::string, fruc::Mode> kModeNames{
    {"unilateral", fruc::Mode::unilateral},
    {"bilateral", fruc::Mode::bilateral},
    {"proposed", fruc::Mode::proposed}};

void add_config_options(CLI::App* cmd, fruc::FrucConfig& cfg) {
  cmd->add_option("--uni-block", cfg.uni_block, "Unilateral block size");
  cmd->add_option("--uni-search", cfg.uni_search, "Unilateral search range");
  cmd->add_option("--bi-block", cfg.bi_block, "Bilateral block size");
  cmd->add_option("--bi-search", cfg.bi_search, "Bilateral search range");
  cmd->add_option("--obmc-margin", cfg.obmc_margin, "Block enlargement margin");
  cmd->add_option("--mode", cfg.mode, "Interpolation mode")
      ->transform(CLI::CheckedTransformer(kModeNames, CLI::ignore_case));
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "Y4M or raw YUV input file")->required();
  cmd->add_option("--raw-size", in.raw_size,
                  "Treat the input as headerless YUV of this WxH size");
  cmd->add_option("--raw-format", in.raw_format, "Raw input sampling: 420 or mono");
  cmd->add_option("--raw-fps", in.raw_fps, "Raw input frame rate (num:den)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motion-compensated frame rate doubling and evaluation"};
  app.require_subcommand(1);

  fruc::FrucConfig cfg;
  InputOptions input;
  std::string output_path;
  std::string report_path;
  std::string dump_mv_prefix;
  std::string dump_holes_prefix;
  long frame_limit = 0;
  std::vector<std::string> spec_args;

  CLI::App* interpolate = app.add_subcommand(
      "interpolate", "Double the frame rate of a sequence");
  add_input_options(interpolate, input);
  add_config_options(interpolate, cfg);
  interpolate->add_option("--output", output_path, "Output Y4M file")->required();
  interpolate->add_option("--dump-mv", dump_mv_prefix,
                          "Write per-pair motion field dumps with this prefix");
  interpolate->add_option("--dump-holes", dump_holes_prefix,
                          "Write per-pair hole masks (PGM) with this prefix");

  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Drop odd frames, reconstruct them, report PSNR");
  add_input_options(evaluate, input);
  add_config_options(evaluate, cfg);
  evaluate->add_option("--report", report_path, "CSV report path");
  evaluate->add_option("--frames", frame_limit,
                       "Use only the first N input frames");
  evaluate->add_option("--dump-mv", dump_mv_prefix,
                       "Write per-pair motion field dumps with this prefix");
  evaluate->add_option("--dump-holes", dump_holes_prefix,
                       "Write per-pair hole masks (PGM) with this prefix");

  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a deterministic synthetic sequence");
  synth->add_option("--spec", spec_args,
                    "Scene entries: width=W height=H frames=N color=mono|420 "
                    "background=flat:V|noise:S "
                    "mover=seed:S,rect:WxH,at:X:Y,vel:VX:VY");
  synth->add_option("--output", output_path, "Output Y4M file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(interpolate)) {
      fruc::SequenceMeta meta;
      const std::vector<fruc::Frame> frames = load_input(input, meta);
      const bool dumping = !dump_mv_prefix.empty() || !dump_holes_prefix.empty();
      std::vector<fruc::StageArtifacts> artifacts;
      const std::vector<fruc::Frame> doubled =
          fruc::double_rate(frames, cfg, dumping ? &artifacts : nullptr);
      for (std::size_t i = 0; i < artifacts.size(); ++i)
        dump_artifacts(artifacts[i], static_cast<int>(i + 1), dump_mv_prefix,
                       dump_holes_prefix);
      write_output(output_path, fruc::double_rate_meta(meta), doubled);
    } else if (app.got_subcommand(evaluate)) {
      fruc::SequenceMeta meta;
      std::vector<fruc::Frame> frames = load_input(input, meta);
      if (frame_limit > 0 && frames.size() > static_cast<std::size_t>(frame_limit))
        frames.resize(static_cast<std::size_t>(frame_limit));
      const bool dumping = !dump_mv_prefix.empty() || !dump_holes_prefix.empty();
      std::vector<fruc::StageArtifacts> artifacts;
      const std::string name = std::filesystem::path(input.path).stem().string();
      const fruc::PsnrReport report = fruc::run_protocol(
          frames, cfg, name, dumping ? &artifacts : nullptr);
      const auto indices =
          fruc::odd_reconstruction_indices(static_cast<std::int64_t>(frames.size()));
      for (std::size_t i = 0; i < artifacts.size(); ++i)
        dump_artifacts(artifacts[i], indices[i], dump_mv_prefix, dump_holes_prefix);
      if (!report_path.empty()) {
        std::ofstream file(report_path, std::ios::binary);
        if (!file) throw fruc::IoError("cannot open report file: " + report_path);
        fruc::write_csv(report, file);
      }
      std::printf("%s %s average %.2f dB (%zu frames)\n",
                  report.sequence_name.c_str(), fruc::mode_name(report.mode),
                  report.average_db, report.per_frame.size());
    } else if (app.got_subcommand(synth)) {
      const fruc::SynthSpec spec = parse_synth_spec(spec_args);
      const std::vector<fruc::Frame> frames = fruc::synth_sequence(spec);
      fruc::SequenceMeta meta;
      meta.width = spec.width;
      meta.height = spec.height;
      meta.color_mode = spec.color_mode;
      meta.frame_count = spec.frame_count;
      write_output(output_path, meta, frames);
    }
  } catch (const fruc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
