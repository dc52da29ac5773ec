#include "ghcode/stream.hpp"

#include <algorithm>

#include "ghcode/errors.hpp"
#include "ghcode/kernels.hpp"

namespace ghcode {

BitBuffer BitBuffer::from_bytes(std::vector<std::uint8_t> bytes, std::size_t bit_length) {
  if (bit_length > 8 * bytes.size()) {
    throw Error(ErrorCode::InvalidArgument, "bit length exceeds the byte payload");
  }
  BitBuffer buf;
  buf.bytes_ = std::move(bytes);
  buf.bit_length_ = bit_length;
  return buf;
}

void BitBuffer::push_bit(bool bit) {
  if (max_bits_ && bit_length_ >= *max_bits_) {
    throw Error(ErrorCode::CapacityExceeded,
                "stream limit of " + std::to_string(*max_bits_) + " bits reached");
  }
  if ((bit_length_ & 7) == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_length_ & 7));
  ++bit_length_;
}

void BitBuffer::write(const Codeword& cw) {
  if (max_bits_ && bit_length_ + cw.size() > *max_bits_) {
    throw Error(ErrorCode::CapacityExceeded,
                "stream limit of " + std::to_string(*max_bits_) + " bits reached");
  }
  for (bool b : cw.bits) push_bit(b);
}

std::string BitBuffer::to_string() const {
  std::string out;
  out.reserve(bit_length_);
  for (std::size_t i = 0; i < bit_length_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

void write_codeword(BitBuffer& buf, const Codeword& cw) { buf.write(cw); }

std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::size_t schedule_index(const RotationSchedule& schedule, std::uint64_t block_index) {
  if (schedule.param_set.empty()) {
    throw Error(ErrorCode::InvalidArgument, "rotation parameter set is empty");
  }
  const std::uint64_t state = schedule.seed + (block_index + 1) * 0x9E3779B97F4A7C15ull;
  return static_cast<std::size_t>(splitmix64_mix(state) % schedule.param_set.size());
}

SequenceDef schedule_def(const RotationSchedule& schedule, std::uint64_t block_index) {
  return schedule.param_set[schedule_index(schedule, block_index)];
}

std::vector<SequenceDef> CodecConfig::sequences() const {
  if (const auto* def = std::get_if<SequenceDef>(&sequence)) return {*def};
  return std::get<RotationSchedule>(sequence).param_set;
}

namespace {

void check_schedule(const CodecConfig& config) {
  if (const auto* rot = std::get_if<RotationSchedule>(&config.sequence)) {
    if (rot->param_set.empty()) {
      throw Error(ErrorCode::InvalidArgument, "rotation parameter set is empty");
    }
    if (rot->block_size == 0) throw Error(ErrorCode::InvalidArgument, "block size must be positive");
  }
}

// Codewords filled on first use, so fixed mode only needs the ranks it sees.
class LazyCodebook {
public:
  LazyCodebook(const SequenceDef& def, CanonicalPolicy policy, std::int64_t max_rank)
      : def_(def), policy_(policy), words_(static_cast<std::size_t>(max_rank)) {}

  const Codeword& get(std::int64_t rank) {
    auto& slot = words_[static_cast<std::size_t>(rank - 1)];
    if (!slot) slot = encode_integer(rank, def_, policy_);
    return *slot;
  }

private:
  SequenceDef def_;
  CanonicalPolicy policy_;
  std::vector<std::optional<Codeword>> words_;
};

// Terms of one sequence up to the last one representable in int64.
std::vector<std::int64_t> representable_terms(const SequenceDef& def) {
  std::vector<std::int64_t> terms{def.a, def.b};
  for (;;) {
    std::int64_t next;
    if (__builtin_add_overflow(terms[terms.size() - 1], terms[terms.size() - 2], &next)) break;
    terms.push_back(next);
  }
  return terms;
}

}  // namespace

void validate_config(const CodecConfig& config, std::int64_t max_rank) {
  check_schedule(config);
  for (const SequenceDef& def : config.sequences()) {
    for (std::int64_t n = 1; n <= max_rank; ++n) {
      try {
        encode_integer(n, def, config.policy);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotEncodable) throw;
        throw Error(ErrorCode::InfeasibleParamSet,
                    to_string(def) + " cannot encode rank " + std::to_string(n));
      }
    }
  }
}

BitBuffer encode_stream(std::span<const std::int64_t> values, const CodecConfig& config) {
  check_schedule(config);
  std::int64_t max_rank = 0;
  for (std::int64_t v : values) {
    if (v < 1) throw Error(ErrorCode::InvalidArgument, "stream values must be positive");
    max_rank = std::max(max_rank, v);
  }

  BitBuffer buf(config.max_stream_bits);
  if (values.empty()) return buf;

  if (const auto* def = std::get_if<SequenceDef>(&config.sequence)) {
    LazyCodebook book(*def, config.policy, max_rank);
    for (std::int64_t v : values) buf.write(book.get(v));
    return buf;
  }

  const auto& schedule = std::get<RotationSchedule>(config.sequence);
  validate_config(config, max_rank);
  std::vector<LazyCodebook> books;
  for (const SequenceDef& def : schedule.param_set) books.emplace_back(def, config.policy, max_rank);
  std::size_t current = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i % schedule.block_size == 0) current = schedule_index(schedule, i / schedule.block_size);
    buf.write(books[current].get(values[i]));
  }
  return buf;
}

std::vector<std::int64_t> decode_stream(const BitBuffer& buf, std::size_t count,
                                        const CodecConfig& config) {
  check_schedule(config);
  const auto sequences = config.sequences();
  for (const SequenceDef& def : sequences) require_coding_valid(def, 2);
  std::vector<std::vector<std::int64_t>> term_tables;
  for (const SequenceDef& def : sequences) term_tables.push_back(representable_terms(def));

  const auto* schedule = std::get_if<RotationSchedule>(&config.sequence);
  const auto bytes = buf.bytes();
  std::vector<std::int64_t> out;
  out.reserve(std::min(count, buf.bit_length() / 2));

  std::size_t pos = 0;
  std::size_t current = 0;
  for (std::size_t i = 0; i < count; ++i) {
    if (schedule && i % schedule->block_size == 0) {
      current = schedule_index(*schedule, i / schedule->block_size);
    }
    const std::size_t top = kernels::find_pair(bytes, pos, buf.bit_length());
    if (top == kernels::npos) {
      throw Error(ErrorCode::IncompleteCodeword,
                  "stream ends inside symbol " + std::to_string(i) + " of " + std::to_string(count));
    }

    const auto& terms = term_tables[current];
    if (top - pos >= terms.size()) {
      throw Error(ErrorCode::ArithmeticOverflow, "codeword too long for int64 terms");
    }
    std::int64_t value = 0;
    for (std::size_t bit = pos; bit <= top; ++bit) {
      if (buf.bit(bit) && __builtin_add_overflow(value, terms[bit - pos], &value)) {
        throw Error(ErrorCode::ArithmeticOverflow, "decoded value exceeds int64");
      }
    }
    if (value < 1) {
      throw Error(ErrorCode::DecodedNonPositive,
                  "symbol " + std::to_string(i) + " decodes to " + std::to_string(value));
    }
    out.push_back(value);
    pos = top + 2;
  }

  if (kernels::any_set(bytes, pos, 8 * bytes.size())) {
    throw Error(ErrorCode::TrailingGarbage, "set bits follow the last symbol");
  }
  return out;
}

}  // namespace ghcode
