#include <cstdlib>

#include "ghcode/kernels.hpp"

namespace ghcode::kernels {

namespace {

struct Table {
  FindPairFn find_pair;
  AnySetFn any_set;
  std::string_view name;
};

Table select() noexcept {
#ifdef GHCODE_HAVE_AVX2
  if (cpu_has_avx2() && std::getenv("GHCODE_FORCE_SCALAR") == nullptr) {
    return {&avx2::find_pair, &avx2::any_set, "avx2"};
  }
#endif
  return {&scalar::find_pair, &scalar::any_set, "scalar"};
}

const Table& table() noexcept {
  static const Table t = select();
  return t;
}

}  // namespace

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::string_view active_isa() noexcept { return table().name; }

std::size_t find_pair(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end) {
  return table().find_pair(bytes, begin, end);
}

bool any_set(std::span<const std::uint8_t> bytes, std::size_t begin, std::size_t end) {
  return table().any_set(bytes, begin, end);
}

}  // namespace ghcode::kernels
