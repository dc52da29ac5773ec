#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ghcode/stream.hpp"

namespace ghcode {

/// Byte value <-> 1-based rank, rank 1 most frequent, ties to the smaller byte.
struct RankMap {
  std::array<std::uint16_t, 256> rank_of{};  // 0 for absent bytes
  std::vector<std::uint8_t> symbol_of;       // symbol_of[r - 1] has rank r

  std::size_t size() const noexcept { return symbol_of.size(); }
};

RankMap build_rank_map(std::span<const std::uint8_t> data);

// GHC1 layout, all integers little-endian:
//   "GHC1" | version u8 = 1 | mode u8 (0 fixed, 1 rotating)
//   fixed:    a i16 | b i16
//   rotating: seed u64 | set length u8 | (a i16, b i16) * length | block size u32
//   symbol count u16 | symbols in rank order
//   symbol count u64 | bit length u64 | packed payload
inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'G', 'H', 'C', '1'};
inline constexpr std::uint8_t kContainerVersion = 1;

struct ContainerHeader {
  CodecConfig config;
  std::vector<std::uint8_t> symbols;
  std::uint64_t symbol_count = 0;
  std::uint64_t bit_length = 0;
};

/// Serialized header, without the payload. Throws InvalidArgument when a
/// parameter does not fit its field.
std::vector<std::uint8_t> serialize_header(const ContainerHeader& header);

/// Parses a header; `header_size` receives the payload offset.
ContainerHeader parse_header(std::span<const std::uint8_t> container, std::size_t& header_size);

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data, const CodecConfig& config);

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> container);

}  // namespace ghcode
