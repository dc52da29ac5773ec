#include "ghcode/sequences.hpp"

#include <algorithm>

#include "ghcode/errors.hpp"

namespace ghcode {

namespace {

bool checked_add(std::int64_t x, std::int64_t y, std::int64_t& out) noexcept {
  return !__builtin_add_overflow(x, y, &out);
}

[[noreturn]] void throw_overflow(const SequenceDef& def, std::size_t k) {
  throw Error(ErrorCode::ArithmeticOverflow,
              "term " + std::to_string(k) + " of " + to_string(def) + " exceeds int64");
}

}  // namespace

std::string to_string(const SequenceDef& def) {
  return "(" + std::to_string(def.a) + ", " + std::to_string(def.b) + ")";
}

std::int64_t gh_term(const SequenceDef& def, std::size_t k) {
  if (k == 0) return def.a;
  std::int64_t prev = def.a;
  std::int64_t cur = def.b;
  for (std::size_t i = 2; i <= k; ++i) {
    std::int64_t next;
    if (!checked_add(prev, cur, next)) throw_overflow(def, i);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<std::int64_t> gh_prefix(const SequenceDef& def, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "prefix length must be positive");
  std::vector<std::int64_t> terms;
  terms.reserve(count);
  terms.push_back(def.a);
  if (count > 1) terms.push_back(def.b);
  for (std::size_t i = 2; i < count; ++i) {
    std::int64_t next;
    if (!checked_add(terms[i - 1], terms[i - 2], next)) throw_overflow(def, i);
    terms.push_back(next);
  }
  return terms;
}

std::size_t search_bound(const SequenceDef& def, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::int64_t limit;
  if (!checked_add(n, std::max<std::int64_t>(0, -def.a), limit)) {
    throw Error(ErrorCode::ArithmeticOverflow, "search limit for n exceeds int64");
  }
  if (def.b <= 0) {
    throw Error(ErrorCode::SequenceDegenerate, "term 1 of " + to_string(def) + " is not positive");
  }
  std::int64_t prev = def.a;
  std::int64_t cur = def.b;
  for (std::size_t k = 2;; ++k) {
    std::int64_t next;
    if (!checked_add(prev, cur, next)) throw_overflow(def, k);
    if (next <= 0) {
      throw Error(ErrorCode::SequenceDegenerate,
                  "term " + std::to_string(k) + " of " + to_string(def) + " is not positive");
    }
    if (next > limit) return k;
    prev = cur;
    cur = next;
  }
}

ValidationReport validate_sequence(const SequenceDef& def, std::size_t max_index) {
  ValidationReport report;
  report.max_index = max_index;

  std::vector<std::int64_t> terms{def.a};
  for (std::size_t k = 1; k <= max_index; ++k) {
    std::int64_t next = def.b;
    if (k >= 2 && !checked_add(terms[k - 1], terms[k - 2], next)) {
      report.overflow_at = k;
      break;
    }
    terms.push_back(next);
  }

  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (terms[k] == 0) report.zero_indices.push_back(k);
    if (k >= 1 && terms[k] < 0) report.negative_indices.push_back(k);
  }

  std::size_t onset = terms.size() - 1;
  while (onset > 0 && terms[onset - 1] < terms[onset]) --onset;
  report.increasing_from = onset;
  return report;
}

void require_coding_valid(const SequenceDef& def, std::size_t max_index) {
  const ValidationReport report = validate_sequence(def, max_index);
  if (!report.zero_indices.empty()) {
    throw Error(ErrorCode::SequenceDegenerate, to_string(def) + " has a zero term at index " +
                                                   std::to_string(report.zero_indices.front()));
  }
  if (!report.negative_indices.empty()) {
    throw Error(ErrorCode::SequenceDegenerate,
                to_string(def) + " has a negative term at index " +
                    std::to_string(report.negative_indices.front()));
  }
}

}  // namespace ghcode
