#include "tsc/wire.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <string>

#include "tsc/error.hpp"

namespace tsc {
namespace wire {

namespace {

constexpr std::uint8_t kMagic[4] = {'T', 'S', 'C', '1'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

void put_header(std::vector<std::uint8_t>& out, const Header& h) {
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(kWireVersion);
  out.push_back(static_cast<std::uint8_t>(h.method));
  out.push_back(0);
  out.push_back(0);
  put_u32(out, h.original_length);
  put_u32(out, h.count);
}

void put_varint(std::vector<std::uint8_t>& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<std::uint8_t>(v | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<std::uint8_t>(v));
}

void put_f32(std::vector<std::uint8_t>& out, float v) {
  put_u32(out, std::bit_cast<std::uint32_t>(v));
}

std::uint8_t Reader::byte() {
  if (pos_ >= bytes_.size()) {
    throw TruncationError("wire buffer truncated at byte " + std::to_string(pos_));
  }
  return bytes_[pos_++];
}

Header Reader::header() {
  if (bytes_.size() < kWireHeaderSize) {
    // A short buffer that does not even start with the magic is not ours.
    if (bytes_.size() < 4 || std::memcmp(bytes_.data(), kMagic, 4) != 0) {
      throw FormatError("not a TSC1 wire buffer");
    }
    throw TruncationError("wire header truncated");
  }
  if (std::memcmp(bytes_.data(), kMagic, 4) != 0) throw FormatError("bad magic");
  pos_ = 4;
  if (byte() != kWireVersion) throw FormatError("unsupported wire version");
  const std::uint8_t tag = byte();
  if (tag > static_cast<std::uint8_t>(Method::Random)) {
    throw FormatError("unknown method tag " + std::to_string(tag));
  }
  if (byte() != 0 || byte() != 0) throw FormatError("reserved header bytes must be zero");
  Header h;
  h.method = static_cast<Method>(tag);
  for (int i = 0; i < 4; ++i) h.original_length |= std::uint32_t{byte()} << (8 * i);
  for (int i = 0; i < 4; ++i) h.count |= std::uint32_t{byte()} << (8 * i);
  return h;
}

std::uint32_t Reader::varint_u32() {
  std::uint64_t v = 0;
  for (int shift = 0; shift < 35; shift += 7) {
    const std::uint8_t b = byte();
    v |= std::uint64_t{b & 0x7Fu} << shift;
    if ((b & 0x80) == 0) {
      if (b == 0 && shift > 0) throw CorruptionError("non-canonical varint");
      if (v > 0xFFFFFFFFu) throw CorruptionError("varint exceeds 32 bits");
      return static_cast<std::uint32_t>(v);
    }
  }
  throw CorruptionError("varint longer than 5 bytes");
}

float Reader::f32() {
  std::uint32_t bits = 0;
  for (int i = 0; i < 4; ++i) bits |= std::uint32_t{byte()} << (8 * i);
  return std::bit_cast<float>(bits);
}

}  // namespace wire

std::vector<std::uint8_t> encode_wire(const CompressedSignal& compressed) {
  compressed.validate();
  if (compressed.method == Method::Dft) {
    throw ParameterError("DFT compressions use the coefficient encoder");
  }
  std::vector<std::uint8_t> out;
  out.reserve(wire_cost(compressed));
  wire::put_header(out, {compressed.method, compressed.original_length,
                         static_cast<std::uint32_t>(compressed.points.size())});
  std::uint32_t prev = 0;
  for (const Point& p : compressed.points) {
    wire::put_varint(out, p.index - prev);
    prev = p.index;
    const float v = static_cast<float>(p.value);
    if (!std::isfinite(v)) throw ParameterError("value overflows f32");
    wire::put_f32(out, v);
  }
  return out;
}

CompressedSignal decode_wire(std::span<const std::uint8_t> bytes, double sample_rate_hz) {
  wire::Reader in(bytes);
  const wire::Header h = in.header();
  if (h.method == Method::Dft) throw FormatError("DFT buffer passed to point decoder");
  if (h.original_length == 0) throw FormatError("original length is zero");
  if (h.count > h.original_length) throw CorruptionError("more points than samples");
  // Every point occupies at least one varint byte plus its value.
  if (std::uint64_t{h.count} * (1 + kPointPayloadSize) > in.remaining()) {
    throw TruncationError("declared point count exceeds payload");
  }

  CompressedSignal out;
  out.original_length = h.original_length;
  out.sample_rate_hz = sample_rate_hz;
  out.method = h.method;
  out.points.reserve(h.count);
  std::uint64_t index = 0;
  for (std::uint32_t i = 0; i < h.count; ++i) {
    const std::uint32_t delta = in.varint_u32();
    if (i > 0 && delta == 0) throw CorruptionError("non-increasing point index");
    index += delta;
    if (index >= h.original_length) throw CorruptionError("point index beyond signal length");
    const float v = in.f32();
    if (!std::isfinite(v)) throw CorruptionError("non-finite point value");
    out.points.push_back({static_cast<std::uint32_t>(index), static_cast<double>(v)});
  }
  if (in.remaining() != 0) throw CorruptionError("trailing bytes after payload");
  if (out.method == Method::Tsc &&
      (out.points.empty() || out.points.front().index != 0 ||
       out.points.back().index != out.original_length - 1)) {
    throw CorruptionError("TSC payload is missing an endpoint");
  }
  return out;
}

std::size_t wire_cost(std::size_t point_count, std::span<const std::uint32_t> deltas) {
  if (deltas.size() != point_count) throw ParameterError("delta count != point count");
  std::size_t total = kWireHeaderSize + kPointPayloadSize * point_count;
  for (std::uint32_t d : deltas) total += varint_length(d);
  return total;
}

std::size_t wire_cost(const CompressedSignal& compressed) {
  std::size_t total = kWireHeaderSize + kPointPayloadSize * compressed.points.size();
  std::uint32_t prev = 0;
  for (const Point& p : compressed.points) {
    total += varint_length(p.index - prev);
    prev = p.index;
  }
  return total;
}

Method peek_method(std::span<const std::uint8_t> bytes) {
  wire::Reader in(bytes);
  return in.header().method;
}

}  // namespace tsc
