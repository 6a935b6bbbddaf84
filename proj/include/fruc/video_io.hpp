#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fruc/frame.hpp"

namespace fruc {

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed stream; the message names the offending byte offset.
class ParseError : public IoError {
  using IoError::IoError;
};

// Incomplete frame payload; the message names the frame index.
class TruncationError : public ParseError {
  using ParseError::ParseError;
};

// Pull parser for the YUV4MPEG2 subset used here: 8-bit planar, Cmono or
// any C420 variant, progressive. The header is consumed on construction.
class Y4mReader {
 public:
  explicit Y4mReader(std::istream& in);

  const SequenceMeta& meta() const { return meta_; }

  // Next frame in stored order, or empty at a clean end of stream.
  std::optional<Frame> next();

 private:
  std::istream* in_;
  SequenceMeta meta_;
  std::int64_t offset_ = 0;
  std::int64_t frame_index_ = 0;
};

class Y4mWriter {
 public:
  // Writes the stream header immediately.
  Y4mWriter(std::ostream& out, const SequenceMeta& meta);

  // Rejects frames that do not match the stream metadata before any bytes
  // of the frame are written.
  void put(const Frame& frame);

 private:
  std::ostream* out_;
  SequenceMeta meta_;
};

// Headerless planar I420 or luma-only data, frame-sequential. Dimensions
// and mode come from the caller.
class RawYuvReader {
 public:
  RawYuvReader(std::istream& in, int width, int height, ColorMode mode);

  const SequenceMeta& meta() const { return meta_; }
  std::optional<Frame> next();

 private:
  std::istream* in_;
  SequenceMeta meta_;
  std::int64_t frame_index_ = 0;
};

template <typename Reader>
std::vector<Frame> read_all(Reader& reader) {
  std::vector<Frame> frames;
  while (auto frame = reader.next()) frames.push_back(std::move(*frame));
  return frames;
}

void write_y4m(std::ostream& out, const SequenceMeta& meta,
               std::span<const Frame> frames);

// Binary PGM (P5), one byte per sample.
void write_pgm(std::ostream& out, const Plane& plane);

}  // namespace fruc
