#pragma once

// Compact little-endian wire format.
//
//   0-3   magic "TSC1"
//   4     version (1)
//   5     method tag (0=TSC 1=PAA 2=DFT 3=RANDOM)
//   6-7   reserved, zero
//   8-11  original length (u32)
//   12-15 entry count (u32)
//   then per entry: LEB128 index delta (first delta = first index), payload
//
// Point payloads are one f32; DFT payloads are two f32 (re, im). The sample
// rate is not transmitted.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tsc/signal.hpp"

namespace tsc {

inline constexpr std::size_t kWireHeaderSize = 16;
inline constexpr std::uint8_t kWireVersion = 1;
inline constexpr std::size_t kPointPayloadSize = 4;

/// Number of bytes in the unsigned LEB128 encoding of v.
constexpr std::size_t varint_length(std::uint64_t v) {
  std::size_t n = 1;
  while (v >= 0x80) {
    v >>= 7;
    ++n;
  }
  return n;
}

std::vector<std::uint8_t> encode_wire(const CompressedSignal& compressed);

/// Decodes a point-format file (TSC, PAA or RANDOM). The sample rate is not
/// part of the format and is supplied by the caller.
CompressedSignal decode_wire(std::span<const std::uint8_t> bytes, double sample_rate_hz = 1.0);

/// Exact size of encode_wire output for the given index deltas.
/// Throws ParameterError if deltas.size() != point_count.
std::size_t wire_cost(std::size_t point_count, std::span<const std::uint32_t> deltas);
std::size_t wire_cost(const CompressedSignal& compressed);

/// Method tag of a wire buffer after checking magic, version and reserved bytes.
Method peek_method(std::span<const std::uint8_t> bytes);

namespace wire {

struct Header {
  Method method = Method::Tsc;
  std::uint32_t original_length = 0;
  std::uint32_t count = 0;
};

void put_header(std::vector<std::uint8_t>& out, const Header& h);
void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v);
void put_f32(std::vector<std::uint8_t>& out, float v);

/// Bounds-checked cursor over a wire buffer. Running past the end raises
/// TruncationError.
class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  Header header();
  std::uint32_t varint_u32();
  float f32();
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::uint8_t byte();

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace wire
}  // namespace tsc
