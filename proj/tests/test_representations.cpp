#include <doctest.h>

#include "ghcode/codeword.hpp"
#include "ghcode/errors.hpp"
#include "ghcode/representations.hpp"
#include "oracles.hpp"

using namespace ghcode;

namespace {

std::vector<std::string> codewords_of(const std::vector<Representation>& reps) {
  std::vector<std::string> out;
  for (const auto& r : reps) out.push_back(rep_to_codeword(r).to_string());
  return out;
}

}  // namespace

TEST_CASE("zeckendorf_greedy examples") {
  CHECK(zeckendorf_greedy(10).set_indices() == std::vector<std::size_t>{1, 4});
  CHECK(zeckendorf_greedy(1).set_indices() == std::vector<std::size_t>{0});
  CHECK(zeckendorf_greedy(12).set_indices() == std::vector<std::size_t>{0, 2, 4});
  CHECK_THROWS_AS(zeckendorf_greedy(0), Error);
  CHECK_THROWS_AS(zeckendorf_greedy(-3), Error);
}

TEST_CASE("zeckendorf_greedy holds the invariants") {
  for (std::int64_t n = 1; n <= 5000; ++n) {
    const auto rep = zeckendorf_greedy(n);
    REQUIRE(is_well_formed(rep));
    REQUIRE(representation_value(rep, SequenceDef::standard()) == n);
  }
  const std::int64_t big = 7'000'000'000'000'000'000;
  CHECK(representation_value(zeckendorf_greedy(big), SequenceDef::standard()) == big);
}

TEST_CASE("enumerate_representations examples") {
  const auto three = enumerate_representations(3, SequenceDef::variant(-2));
  REQUIRE(three.size() == 2);
  CHECK(three[0].set_indices() == std::vector<std::size_t>{1});
  CHECK(three[1].set_indices() == std::vector<std::size_t>{0, 4});

  CHECK(enumerate_representations(5, SequenceDef::variant(-5)).empty());

  const auto ten = enumerate_representations(10, SequenceDef::standard());
  REQUIRE(ten.size() == 1);
  CHECK(ten[0].set_indices() == std::vector<std::size_t>{1, 4});

  CHECK(enumerate_representations(3, SequenceDef::variant(-2), 1).size() == 1);
  CHECK(enumerate_representations(3, SequenceDef::variant(-2), 0).empty());
}

TEST_CASE("enumerate_representations rejects bad input") {
  CHECK_THROWS_AS(enumerate_representations(0, SequenceDef::standard()), Error);
  try {
    enumerate_representations(4, {0, 1});
    FAIL("expected SequenceDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SequenceDegenerate);
  }
  try {
    enumerate_representations(4, {3, -1});
    FAIL("expected SequenceDegenerate");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SequenceDegenerate);
  }
}

TEST_CASE("representation_count examples") {
  CHECK(representation_count(4, SequenceDef::variant(-3)) == 2);
  CHECK(representation_count(12, SequenceDef::variant(-5)) == 0);
  CHECK(representation_count(7, SequenceDef::standard()) == 1);
}

TEST_CASE("enumeration matches bitmask brute force") {
  std::vector<SequenceDef> defs{SequenceDef::standard(), {1, 1}, {3, 4}};
  for (std::int64_t a = -5; a <= -2; ++a) defs.push_back(SequenceDef::variant(a));
  for (const auto& def : defs) {
    for (std::int64_t n = 1; n <= 200; ++n) {
      const auto reps = enumerate_representations(n, def);
      for (const auto& r : reps) {
        REQUIRE(is_well_formed(r));
        REQUIRE(representation_value(r, def) == n);
      }
      const auto expected = oracle::brute_force_codewords(n, def.a, def.b, search_bound(def, n));
      REQUIRE(codewords_of(reps) == expected);
      REQUIRE(representation_count(n, def) == expected.size());
    }
  }
}

TEST_CASE("feasibility_scan") {
  CHECK(feasibility_scan(SequenceDef::variant(-5), 15) == std::vector<std::int64_t>{5, 12});
  CHECK(feasibility_scan(SequenceDef::variant(-2), 15).empty());
  CHECK(feasibility_scan(SequenceDef::standard(), 2000).empty());
  CHECK_THROWS_AS(feasibility_scan(SequenceDef::standard(), 0), Error);
}

TEST_CASE("uniqueness_profile") {
  const auto std_profile = uniqueness_profile(SequenceDef::standard(), 100);
  CHECK(std_profile == std::map<std::size_t, std::size_t>{{1, 100}});

  const auto vf2 = uniqueness_profile(SequenceDef::variant(-2), 15);
  CHECK(vf2.at(2) == 6);  // n = 3, 4, 7, 8, 12, 13

  const auto vf5 = uniqueness_profile(SequenceDef::variant(-5), 15);
  CHECK(vf5.at(0) == 2);

  for (const auto& def : {SequenceDef::variant(-3), SequenceDef::variant(-4), SequenceDef{1, 1}}) {
    std::size_t total = 0;
    for (const auto& [count, how_many] : uniqueness_profile(def, 300)) total += how_many;
    CHECK(total == 300);
  }
}
