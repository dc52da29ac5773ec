#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghcode/representations.hpp"
#include "ghcode/sequences.hpp"

namespace ghcode {

/// Transmitted bits, index 0 first. A valid codeword ends in "11" and has
/// no other adjacent pair of ones.
struct Codeword {
  std::vector<bool> bits;

  std::size_t size() const noexcept { return bits.size(); }

  /// '0'/'1' text, index 0 leftmost.
  std::string to_string() const;
  /// Throws InvalidArgument on characters other than '0' and '1'.
  static Codeword parse(std::string_view text);

  friend bool operator==(const Codeword&, const Codeword&) = default;
};

bool is_valid_codeword(const Codeword& cw) noexcept;

enum class CanonicalPolicy {
  ShortestThenLex,
  GreedyStandard,  // standard sequence only
};

Codeword rep_to_codeword(const Representation& rep);

/// Canonical codeword for n. Throws NotEncodable when n has no
/// representation and InvalidPolicy for GreedyStandard on a variant sequence.
Codeword encode_integer(std::int64_t n, const SequenceDef& def,
                        CanonicalPolicy policy = CanonicalPolicy::ShortestThenLex);

struct DecodeResult {
  std::int64_t value = 0;  // may be <= 0 for "11" when a <= 0
  std::size_t consumed = 0;

  friend bool operator==(const DecodeResult&, const DecodeResult&) = default;
};

/// Decodes the codeword ending at the first "11". Throws IncompleteCodeword
/// when there is none.
DecodeResult decode_codeword(const std::vector<bool>& bits, const SequenceDef& def);
DecodeResult decode_codeword(std::string_view bits, const SequenceDef& def);

struct LengthEntry {
  std::int64_t n = 0;
  std::optional<std::size_t> length;  // nullopt when n is not encodable
};

std::vector<LengthEntry> codeword_lengths(const SequenceDef& def, std::int64_t max_n,
                                          CanonicalPolicy policy = CanonicalPolicy::ShortestThenLex);

/// Canonical codewords for 1..max_rank under one sequence.
class Codebook {
public:
  /// Throws NotEncodable naming the first rank without a codeword.
  Codebook(const SequenceDef& def, std::int64_t max_rank,
           CanonicalPolicy policy = CanonicalPolicy::ShortestThenLex);

  const SequenceDef& sequence() const noexcept { return def_; }
  std::int64_t max_rank() const noexcept { return static_cast<std::int64_t>(words_.size()); }
  const Codeword& operator[](std::int64_t rank) const { return words_.at(static_cast<std::size_t>(rank - 1)); }

private:
  SequenceDef def_;
  std::vector<Codeword> words_;
};

}  // namespace ghcode
