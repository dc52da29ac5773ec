#pragma once

// Test-only reference implementations. None of these call into the code
// paths they are used to check.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::int64_t> terms(std::int64_t a, std::int64_t b, std::size_t count) {
  std::vector<std::int64_t> t{a, b};
  while (t.size() < count) t.push_back(t[t.size() - 1] + t[t.size() - 2]);
  t.resize(count);
  return t;
}

/// Every nonconsecutive bitmask over `width` indices whose selected terms
/// sum to n, as codeword strings sorted by (length, text).
inline std::vector<std::string> brute_force_codewords(std::int64_t n, std::int64_t a, std::int64_t b,
                                                      std::size_t width) {
  const auto t = terms(a, b, width);
  std::vector<std::string> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << width); ++mask) {
    if (mask & (mask >> 1)) continue;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < width; ++i) {
      if ((mask >> i) & 1) sum += t[i];
    }
    if (sum != n) continue;
    const std::size_t top = 63 - static_cast<std::size_t>(__builtin_clzll(mask));
    std::string cw;
    for (std::size_t i = 0; i <= top; ++i) cw.push_back((mask >> i) & 1 ? '1' : '0');
    cw.push_back('1');
    out.push_back(cw);
  }
  std::sort(out.begin(), out.end(), [](const std::string& l, const std::string& r) {
    return l.size() != r.size() ? l.size() < r.size() : l < r;
  });
  return out;
}

/// Largest top index used by any nonconsecutive selection from indices
/// 0..width-1 summing to n; -1 if none. Partial sums of terms at index >= 1
/// are positive, so a prefix already above n - min(a, 0) cannot recover.
inline long deepest_top(std::int64_t n, std::int64_t a, std::int64_t b, std::size_t width) {
  const auto t = terms(a, b, width);
  const std::int64_t ceiling = n - std::min<std::int64_t>(a, 0);
  long best = -1;
  struct Frame {
    long idx;
    std::int64_t sum;
    long top;
  };
  std::vector<Frame> stack{{static_cast<long>(width) - 1, 0, -1}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.idx < 0) {
      if (f.sum == n && f.top >= 0) best = std::max(best, f.top);
      continue;
    }
    stack.push_back({f.idx - 1, f.sum, f.top});
    const std::int64_t with = f.sum + t[static_cast<std::size_t>(f.idx)];
    if (f.idx == 0 || with <= ceiling) {
      stack.push_back({f.idx - 2, with, f.top < 0 ? f.idx : f.top});
    }
  }
  return best;
}

/// Sequential SplitMix64 generator.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t operator()() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

inline bool bit_at(const std::vector<std::uint8_t>& bytes, std::size_t i) {
  return (bytes[i / 8] >> (7 - i % 8)) & 1;
}

inline std::size_t find_pair(const std::vector<std::uint8_t>& bytes, std::size_t begin,
                             std::size_t end) {
  for (std::size_t s = begin; s + 1 < end; ++s) {
    if (bit_at(bytes, s) && bit_at(bytes, s + 1)) return s;
  }
  return static_cast<std::size_t>(-1);
}

inline bool any_set(const std::vector<std::uint8_t>& bytes, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (bit_at(bytes, i)) return true;
  }
  return false;
}

}  // namespace oracle
