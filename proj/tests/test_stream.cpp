#include <doctest.h>

#include <random>

#include "ghcode/errors.hpp"
#include "ghcode/stream.hpp"
#include "oracles.hpp"

using namespace ghcode;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an ghcode::Error");
  return ErrorCode::InvalidArgument;
}

CodecConfig fixed(SequenceDef def) {
  CodecConfig c;
  c.sequence = def;
  return c;
}

CodecConfig rotating(std::uint64_t seed, std::vector<SequenceDef> set, std::uint32_t block) {
  CodecConfig c;
  c.sequence = RotationSchedule{seed, std::move(set), block};
  return c;
}

const std::vector<SequenceDef> kSet{SequenceDef::standard(), SequenceDef::variant(-2),
                                    SequenceDef::variant(-3), SequenceDef::variant(-4)};

}  // namespace

TEST_CASE("write_codeword packs MSB first") {
  BitBuffer buf;
  write_codeword(buf, Codeword::parse("11"));
  CHECK(buf.bit_length() == 2);
  CHECK(buf.bytes()[0] == 0b1100'0000);

  write_codeword(buf, Codeword::parse("011"));
  CHECK(buf.bit_length() == 5);
  CHECK(buf.bytes()[0] == 0b1101'1000);

  BitBuffer full;
  for (int i = 0; i < 4; ++i) write_codeword(full, Codeword::parse("11"));
  CHECK(full.bytes().size() == 1);
  CHECK(full.bytes()[0] == 0xFF);
}

TEST_CASE("write_codeword honours the stream limit") {
  BitBuffer buf(std::optional<std::size_t>{4});
  write_codeword(buf, Codeword::parse("011"));
  CHECK(code_of([&] { write_codeword(buf, Codeword::parse("11")); }) == ErrorCode::CapacityExceeded);
  CHECK(buf.bit_length() == 3);

  CodecConfig c = fixed(SequenceDef::standard());
  c.max_stream_bits = 8;
  const std::vector<std::int64_t> values{1, 1, 1, 1, 1};
  CHECK(code_of([&] { encode_stream(values, c); }) == ErrorCode::CapacityExceeded);
}

TEST_CASE("BitBuffer::from_bytes checks the bit length") {
  CHECK(code_of([] { BitBuffer::from_bytes({0xFF}, 9); }) == ErrorCode::InvalidArgument);
  CHECK(BitBuffer::from_bytes({0xF0}, 4).to_string() == "1111");
}

TEST_CASE("encode_stream examples") {
  const std::vector<std::int64_t> v123{1, 2, 3};
  CHECK(encode_stream(v123, fixed(SequenceDef::standard())).to_string() == "110110011");
  const std::vector<std::int64_t> v5{5};
  CHECK(encode_stream(v5, fixed(SequenceDef::variant(-4))).to_string() == "011");
  CHECK(encode_stream({}, fixed(SequenceDef::standard())).bit_length() == 0);
  CHECK(encode_stream({}, rotating(1, kSet, 4)).bit_length() == 0);

  const std::vector<std::int64_t> bad{1, 0};
  CHECK(code_of([&] { encode_stream(bad, fixed(SequenceDef::standard())); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([&] { encode_stream(v5, fixed(SequenceDef::variant(-5))); }) ==
        ErrorCode::NotEncodable);
  // A deficient code still carries streams that avoid its gaps.
  const std::vector<std::int64_t> v6{6, 13};
  CHECK(encode_stream(v6, fixed(SequenceDef::variant(-5))).to_string() == "01101011");
}

TEST_CASE("decode_stream examples") {
  const auto buf = BitBuffer::from_bytes({0b1101'1001, 0b1000'0000}, 9);
  CHECK(decode_stream(buf, 3, fixed(SequenceDef::standard())) == std::vector<std::int64_t>{1, 2, 3});

  const auto three = BitBuffer::from_bytes({0b0110'0000}, 3);
  CHECK(decode_stream(three, 1, fixed(SequenceDef::variant(-2))) == std::vector<std::int64_t>{3});

  const auto eleven = BitBuffer::from_bytes({0b1100'0000}, 2);
  CHECK(code_of([&] { decode_stream(eleven, 1, fixed(SequenceDef::variant(-2))); }) ==
        ErrorCode::DecodedNonPositive);
}

TEST_CASE("decode_stream error paths") {
  const auto std_cfg = fixed(SequenceDef::standard());
  const auto buf = BitBuffer::from_bytes({0b1101'1001, 0b1000'0000}, 9);
  CHECK(code_of([&] { decode_stream(buf, 4, std_cfg); }) == ErrorCode::IncompleteCodeword);
  CHECK(code_of([&] { decode_stream(BitBuffer::from_bytes({0b1101'1001}, 8), 3, std_cfg); }) ==
        ErrorCode::IncompleteCodeword);
  CHECK(code_of([&] { decode_stream(buf, 2, std_cfg); }) == ErrorCode::TrailingGarbage);
  CHECK(code_of([&] { decode_stream(BitBuffer::from_bytes({0b1100'0001}, 2), 1, std_cfg); }) ==
        ErrorCode::TrailingGarbage);
  CHECK(decode_stream(BitBuffer::from_bytes({0b1100'0000}, 8), 1, std_cfg) ==
        std::vector<std::int64_t>{1});
  CHECK(code_of([&] { decode_stream(buf, 1, fixed({0, 1})); }) == ErrorCode::SequenceDegenerate);
}

TEST_CASE("schedule_def") {
  const RotationSchedule single{99, {SequenceDef::variant(-3)}, 8};
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(schedule_def(single, i) == SequenceDef::variant(-3));

  // Block i draws the (i+1)-th output of a SplitMix64 generator seeded with the key.
  const std::vector<SequenceDef> three{SequenceDef::standard(), SequenceDef::variant(-2),
                                       SequenceDef::variant(-3)};
  const RotationSchedule zero{0, three, 1};
  CHECK(schedule_index(zero, 0) == 1);
  CHECK(schedule_index(zero, 1) == 0);
  CHECK(schedule_index(zero, 2) == 1);
  CHECK(schedule_index(zero, 3) == 1);

  for (std::uint64_t seed : {0ull, 1ull, 0xDEADBEEFull, ~0ull}) {
    oracle::SplitMix64 gen(seed);
    const RotationSchedule s{seed, kSet, 16};
    for (std::uint64_t i = 0; i < 200; ++i) {
      REQUIRE(schedule_index(s, i) == gen() % kSet.size());
      REQUIRE(schedule_def(s, i) == schedule_def(s, i));
    }
  }
}

TEST_CASE("rotation config validation") {
  const std::vector<std::int64_t> values{1, 2, 3, 4, 5};
  CHECK(code_of([&] { encode_stream(values, rotating(1, {}, 4)); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { encode_stream(values, rotating(1, kSet, 0)); }) == ErrorCode::InvalidArgument);
  auto with_gap = kSet;
  with_gap.push_back(SequenceDef::variant(-5));
  CHECK(code_of([&] { encode_stream(values, rotating(1, with_gap, 4)); }) ==
        ErrorCode::InfeasibleParamSet);
  const std::vector<std::int64_t> small{1, 2, 3, 4};
  CHECK(encode_stream(small, rotating(1, with_gap, 4)).bit_length() > 0);
}

TEST_CASE("stream round trips and length accounting") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> rank(1, 1000);
  std::vector<std::int64_t> values(5000);
  for (auto& v : values) v = rank(rng);

  for (const auto& def : kSet) {
    const auto cfg = fixed(def);
    const auto buf = encode_stream(values, cfg);
    CHECK(decode_stream(buf, values.size(), cfg) == values);
    std::size_t expected_bits = 0;
    for (auto v : values) expected_bits += encode_integer(v, def).size();
    CHECK(buf.bit_length() == expected_bits);
  }

  for (std::uint32_t block : {1u, 7u, 64u, 10000u}) {
    const auto cfg = rotating(rng(), kSet, block);
    const auto a = encode_stream(values, cfg);
    const auto b = encode_stream(values, cfg);
    CHECK(a == b);
    CHECK(decode_stream(a, values.size(), cfg) == values);

    std::size_t expected_bits = 0;
    const auto& sched = std::get<RotationSchedule>(cfg.sequence);
    for (std::size_t i = 0; i < values.size(); ++i) {
      expected_bits += encode_integer(values[i], schedule_def(sched, i / block)).size();
    }
    CHECK(a.bit_length() == expected_bits);
  }
}
