#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ghcode/sequences.hpp"

namespace ghcode {

/// Bit vector over sequence indices 0..d selecting terms that sum to the
/// represented integer. bits[d] is set and no two adjacent bits are set.
struct Representation {
  std::vector<bool> bits;

  std::size_t top_index() const noexcept { return bits.empty() ? 0 : bits.size() - 1; }
  std::vector<std::size_t> set_indices() const;

  static Representation from_indices(const std::vector<std::size_t>& indices);

  friend bool operator==(const Representation&, const Representation&) = default;
};

/// Sum of the selected terms.
std::int64_t representation_value(const Representation& rep, const SequenceDef& def);

/// True when the top bit is set and no adjacent pair is set.
bool is_well_formed(const Representation& rep) noexcept;

/// Zeckendorf representation over the standard sequence by repeatedly taking
/// the largest term not exceeding the remainder.
Representation zeckendorf_greedy(std::int64_t n);

/// All representations of n with top index below search_bound(def, n),
/// ordered by top index then by bits read from index 0.
std::vector<Representation> enumerate_representations(
    std::int64_t n, const SequenceDef& def, std::optional<std::size_t> limit = std::nullopt);

std::size_t representation_count(std::int64_t n, const SequenceDef& def);

/// Integers in 1..max_n with no representation, ascending.
std::vector<std::int64_t> feasibility_scan(const SequenceDef& def, std::int64_t max_n);

/// Maps a representation count to how many n in 1..max_n have that count.
std::map<std::size_t, std::size_t> uniqueness_profile(const SequenceDef& def, std::int64_t max_n);

}  // namespace ghcode
