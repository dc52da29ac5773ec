#include <immintrin.h>

#include <algorithm>

#include "ghcode/kernels.hpp"

namespace ghcode::kernels::avx2 {

// Blocks of 32 bytes with no adjacent pair of ones are skipped outright; a
// block that may hold a pair is handed to the scalar kernel, which applies
// the exact range bounds.
std::size_t find_pair(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end) {
  if (end < begin + 2) return npos;
  const __m256i low7 = _mm256_set1_epi8(0x7F);
  const __m256i low1 = _mm256_set1_epi8(0x01);
  const std::uint8_t* data = bytes.data();

  std::size_t q = begin >> 3;
  while (q + 33 <= bytes.size() && 8 * q + 1 < end) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + q));
    const __m256i next = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + q + 1));
    // Within a byte: bit p and p-1. Across bytes: LSB of byte k and MSB of k+1.
    const __m256i within = _mm256_and_si256(v, _mm256_and_si256(_mm256_srli_epi16(v, 1), low7));
    const __m256i across = _mm256_and_si256(v, _mm256_and_si256(_mm256_srli_epi16(next, 7), low1));
    const __m256i any = _mm256_or_si256(within, across);
    if (!_mm256_testz_si256(any, any)) {
      const std::size_t hit =
          scalar::find_pair(bytes, std::max(begin, 8 * q), std::min(end, 8 * q + 257));
      if (hit != npos) return hit;
    }
    q += 32;
  }
  return scalar::find_pair(bytes, std::max(begin, 8 * q), end);
}

bool any_set(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end) {
  if (begin >= end) return false;
  const std::size_t first_full = (begin + 7) >> 3;
  const std::size_t last_full = end >> 3;  // exclusive
  if (first_full + 32 > last_full) return scalar::any_set(bytes, begin, end);

  if (scalar::any_set(bytes, begin, 8 * first_full)) return true;
  std::size_t q = first_full;
  for (; q + 32 <= last_full; q += 32) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bytes.data() + q));
    if (!_mm256_testz_si256(v, v)) return true;
  }
  return scalar::any_set(bytes, 8 * q, end);
}

}  // namespace ghcode::kernels::avx2
