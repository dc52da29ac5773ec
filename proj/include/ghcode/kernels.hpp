#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Bit-scan kernels over MSB-first packed buffers. Bit i lives in byte i / 8
// at mask 0x80 >> (i % 8). Every variant must return identical results; the
// dispatcher picks the widest one the running CPU supports.
namespace ghcode::kernels {

inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

/// Position of the first bit s with begin <= s, s + 1 < end and bits s, s+1
/// both set; npos if none. Requires end <= 8 * bytes.size().
using FindPairFn = std::size_t (*)(std::span<const std::uint8_t> bytes, std::size_t begin,
                                   std::size_t end);

/// True if any bit in [begin, end) is set.
using AnySetFn = bool (*)(std::span<const std::uint8_t> bytes, std::size_t begin,
                          std::size_t end);

namespace scalar {
std::size_t find_pair(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end);
bool any_set(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end);
}  // namespace scalar

#ifdef GHCODE_HAVE_AVX2
namespace avx2 {
std::size_t find_pair(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end);
bool any_set(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end);
}  // namespace avx2
#endif

bool cpu_has_avx2() noexcept;

/// Name of the variant the dispatcher selected ("avx2" or "scalar").
/// Setting GHCODE_FORCE_SCALAR in the environment pins the scalar path.
std::string_view active_isa() noexcept;

std::size_t find_pair(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end);
bool any_set(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end);

}  // namespace ghcode::kernels
