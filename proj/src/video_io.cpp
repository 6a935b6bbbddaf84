#include "fruc/video_io.hpp"

#include <istream>
#include <ostream>
#include <string_view>

namespace fruc {

namespace {

constexpr std::string_view kSignature = "YUV4MPEG2";
constexpr std::size_t kMaxHeaderLine = 4096;

std::string at_offset(std::int64_t offset) {
  return " at byte offset " + std::to_string(offset);
}

// Reads up to the next '\n' (not included). Returns false on immediate EOF.
bool read_line(std::istream& in, std::string& line, std::int64_t offset) {
  line.clear();
  int c = in.get();
  if (c == std::istream::traits_type::eof()) return false;
  while (c != '\n') {
    if (c == std::istream::traits_type::eof())
      throw ParseError("unterminated marker line" + at_offset(offset + static_cast<std::int64_t>(line.size())));
    line.push_back(static_cast<char>(c));
    if (line.size() > kMaxHeaderLine)
      throw ParseError("marker line exceeds " + std::to_string(kMaxHeaderLine) + " bytes" + at_offset(offset));
    c = in.get();
  }
  return true;
}

int parse_positive_int(std::string_view text, std::string_view tag, std::int64_t offset) {
  if (text.empty()) throw ParseError(std::string("empty ") + std::string(tag) + " tag" + at_offset(offset));
  long value = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      throw ParseError("malformed " + std::string(tag) + " tag" + at_offset(offset));
    value = value * 10 + (c - '0');
    if (value > 1 << 24)
      throw ParseError(std::string(tag) + " tag out of range" + at_offset(offset));
  }
  if (value < 1)
    throw ParseError(std::string(tag) + " tag must be positive" + at_offset(offset));
  return static_cast<int>(value);
}

Rational parse_ratio(std::string_view text, std::int64_t offset) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("malformed F tag (expected num:den)" + at_offset(offset));
  Rational r;
  r.num = parse_positive_int(text.substr(0, colon), "F", offset);
  r.den = parse_positive_int(text.substr(colon + 1), "F", offset);
  return r;
}

ColorMode parse_colorspace(std::string_view text, std::int64_t offset) {
  if (text == "420" || text == "420jpeg" || text == "420paldv" || text == "420mpeg2")
    return ColorMode::yuv420;
  if (text == "mono") return ColorMode::luma_only;
  throw ParseError("unsupported colorspace C" + std::string(text) + at_offset(offset));
}

std::size_t luma_bytes(const SequenceMeta& meta) {
  return static_cast<std::size_t>(meta.width) * meta.height;
}

std::size_t chroma_bytes(const SequenceMeta& meta) {
  return meta.color_mode == ColorMode::yuv420
             ? static_cast<std::size_t>(meta.width / 2) * (meta.height / 2)
             : 0;
}

void read_plane(std::istream& in, Plane& plane, std::int64_t frame_index) {
  const std::streamsize want = static_cast<std::streamsize>(plane.samples.size());
  in.read(reinterpret_cast<char*>(plane.samples.data()), want);
  if (in.gcount() != want)
    throw TruncationError("truncated frame payload in frame " + std::to_string(frame_index));
}

void write_plane(std::ostream& out, const Plane& plane) {
  out.write(reinterpret_cast<const char*>(plane.samples.data()),
            static_cast<std::streamsize>(plane.samples.size()));
}

}  // namespace

Y4mReader::Y4mReader(std::istream& in) : in_(&in) {
  std::string line;
  if (!read_line(in, line, 0) || line.substr(0, kSignature.size()) != kSignature)
    throw ParseError("missing YUV4MPEG2 signature" + at_offset(0));

  bool have_width = false;
  bool have_height = false;
  meta_.color_mode = ColorMode::yuv420;  // stream default when no C tag
  std::size_t pos = kSignature.size();
  while (pos < line.size()) {
    if (line[pos] != ' ')
      throw ParseError("expected space between header tags" + at_offset(static_cast<std::int64_t>(pos)));
    ++pos;
    std::size_t end = line.find(' ', pos);
    if (end == std::string::npos) end = line.size();
    const std::string_view token(line.data() + pos, end - pos);
    const auto token_offset = static_cast<std::int64_t>(pos);
    if (token.empty())
      throw ParseError("empty header tag" + at_offset(token_offset));
    const std::string_view value = token.substr(1);
    switch (token[0]) {
      case 'W':
        meta_.width = parse_positive_int(value, "W", token_offset);
        have_width = true;
        break;
      case 'H':
        meta_.height = parse_positive_int(value, "H", token_offset);
        have_height = true;
        break;
      case 'F':
        meta_.frame_rate = parse_ratio(value, token_offset);
        break;
      case 'C':
        meta_.color_mode = parse_colorspace(value, token_offset);
        break;
      case 'I':  // interlace tag ignored
      case 'A':  // aspect ratio ignored
      case 'X':  // extensions ignored
        break;
      default:
        throw ParseError("unknown header tag '" + std::string(1, token[0]) + "'" + at_offset(token_offset));
    }
    pos = end;
  }
  if (!have_width || !have_height)
    throw ParseError("header missing W or H tag" + at_offset(0));
  if (meta_.color_mode == ColorMode::yuv420 &&
      (meta_.width % 2 != 0 || meta_.height % 2 != 0))
    throw ParseError("4:2:0 stream requires even dimensions" + at_offset(0));
  offset_ = static_cast<std::int64_t>(line.size()) + 1;
}

std::optional<Frame> Y4mReader::next() {
  std::string line;
  if (!read_line(*in_, line, offset_)) return std::nullopt;
  if (line.substr(0, 5) != "FRAME")
    throw ParseError("expected FRAME marker" + at_offset(offset_));
  offset_ += static_cast<std::int64_t>(line.size()) + 1;

  Frame frame = make_frame(meta_.width, meta_.height, meta_.color_mode);
  read_plane(*in_, frame.luma, frame_index_);
  if (meta_.color_mode == ColorMode::yuv420) {
    read_plane(*in_, frame.chroma_u, frame_index_);
    read_plane(*in_, frame.chroma_v, frame_index_);
  }
  offset_ += static_cast<std::int64_t>(luma_bytes(meta_) + 2 * chroma_bytes(meta_));
  ++frame_index_;
  return frame;
}

Y4mWriter::Y4mWriter(std::ostream& out, const SequenceMeta& meta)
    : out_(&out), meta_(meta) {
  if (meta.width < 1 || meta.height < 1)
    throw std::invalid_argument("stream dimensions must be positive");
  if (meta.color_mode == ColorMode::yuv420 &&
      (meta.width % 2 != 0 || meta.height % 2 != 0))
    throw std::invalid_argument("4:2:0 stream requires even dimensions");
  if (meta.frame_rate.num < 1 || meta.frame_rate.den < 1)
    throw std::invalid_argument("frame rate must be positive");
  *out_ << "YUV4MPEG2 W" << meta.width << " H" << meta.height << " F"
        << meta.frame_rate.num << ':' << meta.frame_rate.den << " Ip A1:1 C"
        << (meta.color_mode == ColorMode::yuv420 ? "420jpeg" : "mono") << '\n';
}

void Y4mWriter::put(const Frame& frame) {
  if (frame.width() != meta_.width || frame.height() != meta_.height ||
      frame.color_mode() != meta_.color_mode)
    throw std::invalid_argument("frame does not match stream metadata");
  *out_ << "FRAME\n";
  write_plane(*out_, frame.luma);
  if (frame.has_chroma()) {
    write_plane(*out_, frame.chroma_u);
    write_plane(*out_, frame.chroma_v);
  }
}

RawYuvReader::RawYuvReader(std::istream& in, int width, int height, ColorMode mode)
    : in_(&in) {
  if (width < 1 || height < 1)
    throw std::invalid_argument("raw stream dimensions must be positive");
  if (mode == ColorMode::yuv420 && (width % 2 != 0 || height % 2 != 0))
    throw std::invalid_argument("4:2:0 raw stream requires even dimensions");
  meta_.width = width;
  meta_.height = height;
  meta_.color_mode = mode;
}

std::optional<Frame> RawYuvReader::next() {
  if (in_->peek() == std::istream::traits_type::eof()) return std::nullopt;
  Frame frame = make_frame(meta_.width, meta_.height, meta_.color_mode);
  read_plane(*in_, frame.luma, frame_index_);
  if (meta_.color_mode == ColorMode::yuv420) {
    read_plane(*in_, frame.chroma_u, frame_index_);
    read_plane(*in_, frame.chroma_v, frame_index_);
  }
  ++frame_index_;
  return frame;
}

void write_y4m(std::ostream& out, const SequenceMeta& meta,
               std::span<const Frame> frames) {
  Y4mWriter writer(out, meta);
  for (const Frame& frame : frames) writer.put(frame);
}

void write_pgm(std::ostream& out, const Plane& plane) {
  out << "P5\n" << plane.width << ' ' << plane.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(plane.samples.data()),
            static_cast<std::streamsize>(plane.samples.size()));
}

}  // namespace fruc
