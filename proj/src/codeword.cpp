#include "ghcode/codeword.hpp"

#include "ghcode/errors.hpp"

namespace ghcode {

std::string Codeword::to_string() const {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Codeword Codeword::parse(std::string_view text) {
  Codeword cw;
  cw.bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw Error(ErrorCode::InvalidArgument, "codeword text may only contain 0 and 1");
    }
    cw.bits.push_back(c == '1');
  }
  return cw;
}

bool is_valid_codeword(const Codeword& cw) noexcept {
  const auto& b = cw.bits;
  if (b.size() < 2 || !b[b.size() - 1] || !b[b.size() - 2]) return false;
  for (std::size_t i = 1; i + 1 < b.size(); ++i) {
    if (b[i] && b[i - 1]) return false;
  }
  return true;
}

Codeword rep_to_codeword(const Representation& rep) {
  Codeword cw{rep.bits};
  cw.bits.push_back(true);
  return cw;
}

Codeword encode_integer(std::int64_t n, const SequenceDef& def, CanonicalPolicy policy) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (policy == CanonicalPolicy::GreedyStandard) {
    if (!def.is_standard()) {
      throw Error(ErrorCode::InvalidPolicy, "greedy policy requires the standard sequence, got " +
                                                to_string(def));
    }
    return rep_to_codeword(zeckendorf_greedy(n));
  }
  auto reps = enumerate_representations(n, def, 1);
  if (reps.empty()) {
    throw Error(ErrorCode::NotEncodable,
                std::to_string(n) + " has no representation over " + to_string(def));
  }
  return rep_to_codeword(reps.front());
}

namespace {

template <class BitAt>
DecodeResult decode_bits(std::size_t size, BitAt bit_at, const SequenceDef& def) {
  std::size_t end = 0;
  for (std::size_t i = 1; i < size; ++i) {
    if (bit_at(i) && bit_at(i - 1)) {
      end = i + 1;
      break;
    }
  }
  if (end == 0) throw Error(ErrorCode::IncompleteCodeword, "no terminating 11 found");

  // The final bit is the appended terminator and carries no term.
  const std::size_t rep_len = end - 1;
  const auto terms = gh_prefix(def, rep_len);
  std::int64_t value = 0;
  for (std::size_t i = 0; i < rep_len; ++i) {
    if (bit_at(i) && __builtin_add_overflow(value, terms[i], &value)) {
      throw Error(ErrorCode::ArithmeticOverflow, "decoded value exceeds int64");
    }
  }
  return {value, end};
}

}  // namespace

DecodeResult decode_codeword(const std::vector<bool>& bits, const SequenceDef& def) {
  return decode_bits(bits.size(), [&](std::size_t i) -> bool { return bits[i]; }, def);
}

DecodeResult decode_codeword(std::string_view bits, const SequenceDef& def) {
  return decode_codeword(Codeword::parse(bits).bits, def);
}

std::vector<LengthEntry> codeword_lengths(const SequenceDef& def, std::int64_t max_n,
                                          CanonicalPolicy policy) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "range bound must be positive");
  std::vector<LengthEntry> out;
  out.reserve(static_cast<std::size_t>(max_n));
  for (std::int64_t n = 1; n <= max_n; ++n) {
    LengthEntry entry{n, std::nullopt};
    try {
      entry.length = encode_integer(n, def, policy).size();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotEncodable) throw;
    }
    out.push_back(entry);
  }
  return out;
}

Codebook::Codebook(const SequenceDef& def, std::int64_t max_rank, CanonicalPolicy policy)
    : def_(def) {
  if (max_rank < 0) throw Error(ErrorCode::InvalidArgument, "max rank must not be negative");
  words_.reserve(static_cast<std::size_t>(max_rank));
  for (std::int64_t n = 1; n <= max_rank; ++n) words_.push_back(encode_integer(n, def, policy));
}

}  // namespace ghcode
