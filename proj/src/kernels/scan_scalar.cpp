#include <algorithm>
#include <cstring>

#include "ghcode/kernels.hpp"

namespace ghcode::kernels::scalar {

namespace {

// Eight bytes from offset q as a big-endian word, zero past the end.
std::uint64_t load_be64(std::span<const std::uint8_t> bytes, std::size_t q) noexcept {
  std::uint8_t tmp[8] = {};
  if (q < bytes.size()) std::memcpy(tmp, bytes.data() + q, std::min<std::size_t>(8, bytes.size() - q));
  std::uint64_t w = 0;
  for (std::uint8_t b : tmp) w = (w << 8) | b;
  return w;
}

}  // namespace

std::size_t find_pair(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end) {
  if (end < begin + 2) return npos;
  const std::size_t last_start = end - 2;
  for (std::size_t q = begin >> 3; 8 * q <= last_start; q += 8) {
    const std::uint64_t w = load_be64(bytes, q);
    const std::uint64_t next = q + 8 < bytes.size() ? bytes[q + 8] >> 7 : 0;
    // Bit 63 - j flags a pair starting at bit 8q + j.
    std::uint64_t pairs = (w & (w << 1)) | (w & next);

    const std::size_t base = 8 * q;
    if (base < begin) pairs &= ~std::uint64_t{0} >> (begin - base);
    if (base + 63 > last_start) pairs &= ~(~std::uint64_t{0} >> (last_start - base + 1));
    if (pairs) return base + static_cast<std::size_t>(__builtin_clzll(pairs));
  }
  return npos;
}

bool any_set(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  const std::size_t first = begin >> 3;
  const std::size_t last = (end - 1) >> 3;
  const auto head_mask = static_cast<std::uint8_t>(0xFFu >> (begin & 7));
  const auto tail_mask = static_cast<std::uint8_t>(0xFFu << (7 - ((end - 1) & 7)));
  if (first == last) return (bytes[first] & head_mask & tail_mask) != 0;
  if (bytes[first] & head_mask) return true;
  if (bytes[last] & tail_mask) return true;

  std::size_t q = first + 1;
  for (; q + 8 <= last; q += 8) {
    std::uint64_t w;
    std::memcpy(&w, bytes.data() + q, 8);
    if (w) return true;
  }
  for (; q < last; ++q) {
    if (bytes[q]) return true;
  }
  return false;
}

}  // namespace ghcode::kernels::scalar
