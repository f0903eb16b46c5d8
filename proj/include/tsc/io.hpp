#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "tsc/signal.hpp"

namespace tsc {

/// Reads a mono 8- or 16-bit PCM WAV file. Samples are scaled into [-1, 1]
/// by the integer type's largest magnitude (128 or 32768).
Signal read_wav(const std::filesystem::path& path);
Signal parse_wav(std::span<const std::uint8_t> bytes);

/// Writes 16-bit mono PCM; samples are clamped to [-1, 1) before scaling.
void write_wav(const std::filesystem::path& path, const Signal& signal);

/// One sample per line; a non-numeric first line is treated as a header.
/// Blank lines are ignored.
Signal read_csv(const std::filesystem::path& path, double sample_rate_hz = 1.0);
Signal parse_csv(std::istream& in, double sample_rate_hz = 1.0);
void write_csv(const std::filesystem::path& path, std::span<const double> values);

/// Picks the reader from the extension (.wav, otherwise CSV).
Signal read_signal(const std::filesystem::path& path, double csv_sample_rate_hz = 1.0);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace tsc
