#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ghcode/codeword.hpp"
#include "ghcode/sequences.hpp"

namespace ghcode {

/// Bits packed MSB-first within each byte; the unused tail of the last byte
/// stays zero.
class BitBuffer {
public:
  BitBuffer() = default;
  explicit BitBuffer(std::optional<std::size_t> max_bits) : max_bits_(max_bits) {}

  /// Adopts packed bytes. Throws InvalidArgument when bit_length exceeds
  /// 8 * bytes.size().
  static BitBuffer from_bytes(std::vector<std::uint8_t> bytes, std::size_t bit_length);

  void push_bit(bool bit);
  void write(const Codeword& cw);

  bool bit(std::size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u; }
  std::size_t bit_length() const noexcept { return bit_length_; }
  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }
  std::vector<std::uint8_t> release() && { return std::move(bytes_); }

  /// '0'/'1' text of the first bit_length bits.
  std::string to_string() const;

  friend bool operator==(const BitBuffer& l, const BitBuffer& r) {
    return l.bit_length_ == r.bit_length_ && l.bytes_ == r.bytes_;
  }

private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bit_length_ = 0;
  std::optional<std::size_t> max_bits_;
};

/// Appends cw to buf. Throws CapacityExceeded past the buffer's bit limit.
void write_codeword(BitBuffer& buf, const Codeword& cw);

/// Block-wise codebook switching. Block i uses
/// param_set[splitmix64(seed + (i + 1) * golden) % param_set.size()], i.e.
/// the (i+1)-th output of a SplitMix64 generator seeded with `seed`.
/// This is obfuscation, not encryption.
struct RotationSchedule {
  std::uint64_t seed = 0;
  std::vector<SequenceDef> param_set;
  std::uint32_t block_size = 64;
};

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept;

/// Index into param_set used for the given block.
std::size_t schedule_index(const RotationSchedule& schedule, std::uint64_t block_index);
SequenceDef schedule_def(const RotationSchedule& schedule, std::uint64_t block_index);

struct CodecConfig {
  std::variant<SequenceDef, RotationSchedule> sequence = SequenceDef::standard();
  CanonicalPolicy policy = CanonicalPolicy::ShortestThenLex;
  /// Upper bound on encoded stream size; unbounded when empty.
  std::optional<std::size_t> max_stream_bits;

  bool rotating() const noexcept { return std::holds_alternative<RotationSchedule>(sequence); }
  /// Every sequence the config can select.
  std::vector<SequenceDef> sequences() const;
};

/// Throws InfeasibleParamSet unless every sequence of the config encodes
/// each of 1..max_rank, and InvalidArgument for a malformed schedule.
void validate_config(const CodecConfig& config, std::int64_t max_rank);

BitBuffer encode_stream(std::span<const std::int64_t> values, const CodecConfig& config);

std::vector<std::int64_t> decode_stream(const BitBuffer& buf, std::size_t count,
                                        const CodecConfig& config);

}  // namespace ghcode
