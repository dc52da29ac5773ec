#include "ghcode/container.hpp"

#include <algorithm>
#include <limits>

#include "ghcode/errors.hpp"

namespace ghcode {

RankMap build_rank_map(std::span<const std::uint8_t> data) {
  std::array<std::uint64_t, 256> freq{};
  for (std::uint8_t b : data) ++freq[b];

  RankMap map;
  for (int v = 0; v < 256; ++v) {
    if (freq[v]) map.symbol_of.push_back(static_cast<std::uint8_t>(v));
  }
  std::stable_sort(map.symbol_of.begin(), map.symbol_of.end(),
                   [&](std::uint8_t l, std::uint8_t r) { return freq[l] > freq[r]; });
  for (std::size_t i = 0; i < map.symbol_of.size(); ++i) {
    map.rank_of[map.symbol_of[i]] = static_cast<std::uint16_t>(i + 1);
  }
  return map;
}

namespace {

class Writer {
public:
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) { le(v, 2); }
  void u32(std::uint32_t v) { le(v, 4); }
  void u64(std::uint64_t v) { le(v, 8); }
  void i16(std::int64_t v, const char* what) {
    if (v < std::numeric_limits<std::int16_t>::min() || v > std::numeric_limits<std::int16_t>::max()) {
      throw Error(ErrorCode::InvalidArgument,
                  std::string(what) + " = " + std::to_string(v) + " does not fit in 16 bits");
    }
    u16(static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
  }
  std::vector<std::uint8_t> take() && { return std::move(out_); }

private:
  void le(std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) out_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  std::vector<std::uint8_t> out_;
};

class Reader {
public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}

  std::uint8_t u8() { return static_cast<std::uint8_t>(le(1)); }
  std::uint16_t u16() { return static_cast<std::uint16_t>(le(2)); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(le(4)); }
  std::uint64_t u64() { return le(8); }
  std::int64_t i16() { return static_cast<std::int16_t>(u16()); }
  std::size_t offset() const noexcept { return pos_; }

private:
  std::uint64_t le(int n) {
    if (in_.size() - pos_ < static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::CorruptHeader, "header truncated at byte " + std::to_string(pos_));
    }
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v |= std::uint64_t{in_[pos_ + i]} << (8 * i);
    pos_ += n;
    return v;
  }
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_header(const ContainerHeader& header) {
  if (header.symbols.size() > 256) {
    throw Error(ErrorCode::InvalidArgument, "symbol table holds more than 256 entries");
  }
  Writer w;
  for (std::uint8_t m : kContainerMagic) w.u8(m);
  w.u8(kContainerVersion);
  if (const auto* def = std::get_if<SequenceDef>(&header.config.sequence)) {
    w.u8(0);
    w.i16(def->a, "a");
    w.i16(def->b, "b");
  } else {
    const auto& rot = std::get<RotationSchedule>(header.config.sequence);
    if (rot.param_set.empty() || rot.param_set.size() > 255) {
      throw Error(ErrorCode::InvalidArgument, "rotation set must hold 1..255 sequences");
    }
    w.u8(1);
    w.u64(rot.seed);
    w.u8(static_cast<std::uint8_t>(rot.param_set.size()));
    for (const SequenceDef& def : rot.param_set) {
      w.i16(def.a, "a");
      w.i16(def.b, "b");
    }
    w.u32(rot.block_size);
  }
  w.u16(static_cast<std::uint16_t>(header.symbols.size()));
  for (std::uint8_t s : header.symbols) w.u8(s);
  w.u64(header.symbol_count);
  w.u64(header.bit_length);
  return std::move(w).take();
}

ContainerHeader parse_header(std::span<const std::uint8_t> container, std::size_t& header_size) {
  if (container.size() < kContainerMagic.size() ||
      !std::equal(kContainerMagic.begin(), kContainerMagic.end(), container.begin())) {
    throw Error(ErrorCode::BadMagic, "input is not a GHC1 container");
  }
  Reader r(container.subspan(kContainerMagic.size()));
  ContainerHeader header;

  const std::uint8_t version = r.u8();
  if (version != kContainerVersion) {
    throw Error(ErrorCode::UnsupportedVersion, "container version " + std::to_string(version));
  }
  const std::uint8_t mode = r.u8();
  if (mode == 0) {
    SequenceDef def;
    def.a = r.i16();
    def.b = r.i16();
    header.config.sequence = def;
  } else if (mode == 1) {
    RotationSchedule rot;
    rot.seed = r.u64();
    const std::uint8_t n = r.u8();
    if (n == 0) throw Error(ErrorCode::CorruptHeader, "empty rotation set");
    for (std::uint8_t i = 0; i < n; ++i) {
      SequenceDef def;
      def.a = r.i16();
      def.b = r.i16();
      rot.param_set.push_back(def);
    }
    rot.block_size = r.u32();
    if (rot.block_size == 0) throw Error(ErrorCode::CorruptHeader, "zero block size");
    header.config.sequence = std::move(rot);
  } else {
    throw Error(ErrorCode::CorruptHeader, "unknown mode " + std::to_string(mode));
  }

  const std::uint16_t table_size = r.u16();
  if (table_size > 256) throw Error(ErrorCode::CorruptHeader, "symbol table larger than 256");
  std::array<bool, 256> seen{};
  for (std::uint16_t i = 0; i < table_size; ++i) {
    const std::uint8_t s = r.u8();
    if (seen[s]) throw Error(ErrorCode::CorruptHeader, "duplicate symbol in table");
    seen[s] = true;
    header.symbols.push_back(s);
  }
  header.symbol_count = r.u64();
  header.bit_length = r.u64();
  if (header.symbol_count > 0 && header.symbols.empty()) {
    throw Error(ErrorCode::CorruptHeader, "symbols declared without a symbol table");
  }
  header_size = kContainerMagic.size() + r.offset();
  return header;
}

std::vector<std::uint8_t> compress(std::span<const std::uint8_t> data, const CodecConfig& config) {
  const RankMap map = build_rank_map(data);
  validate_config(config, static_cast<std::int64_t>(map.size()));

  std::vector<std::int64_t> ranks(data.size());
  std::transform(data.begin(), data.end(), ranks.begin(),
                 [&](std::uint8_t b) { return std::int64_t{map.rank_of[b]}; });
  const BitBuffer payload = encode_stream(ranks, config);

  ContainerHeader header;
  header.config = config;
  header.symbols = map.symbol_of;
  header.symbol_count = data.size();
  header.bit_length = payload.bit_length();

  auto out = serialize_header(header);
  const auto bytes = payload.bytes();
  out.insert(out.end(), bytes.begin(), bytes.end());
  return out;
}

std::vector<std::uint8_t> decompress(std::span<const std::uint8_t> container) {
  std::size_t header_size = 0;
  const ContainerHeader header = parse_header(container, header_size);
  const auto payload = container.subspan(header_size);

  if (header.bit_length > std::numeric_limits<std::uint64_t>::max() - 7 ||
      payload.size() > (header.bit_length + 7) / 8) {
    throw Error(ErrorCode::CorruptHeader, "payload longer than the declared bit length");
  }
  // A short payload is decoded as far as it goes and fails on the first
  // symbol it cannot complete.
  const std::size_t available_bits =
      static_cast<std::size_t>(std::min<std::uint64_t>(header.bit_length, 8 * payload.size()));
  const BitBuffer buf = BitBuffer::from_bytes({payload.begin(), payload.end()}, available_bits);

  const auto ranks = decode_stream(buf, static_cast<std::size_t>(header.symbol_count), header.config);
  std::vector<std::uint8_t> out;
  out.reserve(ranks.size());
  for (std::int64_t rank : ranks) {
    if (rank > static_cast<std::int64_t>(header.symbols.size())) {
      throw Error(ErrorCode::RankOutOfRange,
                  "rank " + std::to_string(rank) + " exceeds symbol table of " +
                      std::to_string(header.symbols.size()));
    }
    out.push_back(header.symbols[static_cast<std::size_t>(rank - 1)]);
  }
  return out;
}

}  // namespace ghcode
