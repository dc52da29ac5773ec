#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ghcode {

/// Parameters of a Gopala-Hemachandra sequence a, b, a+b, a+2b, ...
struct SequenceDef {
  std::int64_t a = 1;
  std::int64_t b = 2;

  /// The Fibonacci numbers 1, 2, 3, 5, 8, ...
  static constexpr SequenceDef standard() noexcept { return {1, 2}; }
  /// The variant family whose second term is 1 - a.
  static constexpr SequenceDef variant(std::int64_t a) noexcept { return {a, 1 - a}; }

  bool is_standard() const noexcept { return a == 1 && b == 2; }
  friend bool operator==(const SequenceDef&, const SequenceDef&) = default;
};

std::string to_string(const SequenceDef& def);

/// k-th term of the recurrence. Throws ArithmeticOverflow when the term
/// does not fit in int64.
std::int64_t gh_term(const SequenceDef& def, std::size_t k);

/// Terms 0..count-1.
std::vector<std::int64_t> gh_prefix(const SequenceDef& def, std::size_t count);

/// Smallest index D >= 2 with term(D) > n + max(0, -a). No representation of
/// n can select a term at index >= D when only index 0 may be negative.
/// Throws SequenceDegenerate if a term <= 0 shows up at index >= 1 first.
std::size_t search_bound(const SequenceDef& def, std::int64_t n);

struct ValidationReport {
  std::size_t max_index = 0;
  std::vector<std::size_t> zero_indices;
  std::vector<std::size_t> negative_indices;  // index >= 1 only
  /// Index from which terms are strictly increasing up to max_index (or up
  /// to the last representable term).
  std::size_t increasing_from = 0;
  /// Set when a term beyond this index would overflow; the report covers
  /// indices below it.
  std::optional<std::size_t> overflow_at;

  bool valid_for_coding() const noexcept {
    return zero_indices.empty() && negative_indices.empty();
  }
};

ValidationReport validate_sequence(const SequenceDef& def, std::size_t max_index);

/// Throws SequenceDegenerate unless indices 0..max_index are usable for coding.
void require_coding_valid(const SequenceDef& def, std::size_t max_index);

}  // namespace ghcode
