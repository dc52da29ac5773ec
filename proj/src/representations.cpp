#include "ghcode/representations.hpp"

#include <algorithm>

#include "ghcode/errors.hpp"

namespace ghcode {

std::vector<std::size_t> Representation::set_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) out.push_back(i);
  }
  return out;
}

Representation Representation::from_indices(const std::vector<std::size_t>& indices) {
  Representation rep;
  if (indices.empty()) return rep;
  rep.bits.assign(*std::max_element(indices.begin(), indices.end()) + 1, false);
  for (std::size_t i : indices) rep.bits[i] = true;
  return rep;
}

std::int64_t representation_value(const Representation& rep, const SequenceDef& def) {
  if (rep.bits.empty()) return 0;
  const auto terms = gh_prefix(def, rep.bits.size());
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < rep.bits.size(); ++i) {
    if (rep.bits[i] && __builtin_add_overflow(sum, terms[i], &sum)) {
      throw Error(ErrorCode::ArithmeticOverflow, "representation value exceeds int64");
    }
  }
  return sum;
}

bool is_well_formed(const Representation& rep) noexcept {
  if (rep.bits.empty() || !rep.bits.back()) return false;
  for (std::size_t i = 1; i < rep.bits.size(); ++i) {
    if (rep.bits[i] && rep.bits[i - 1]) return false;
  }
  return true;
}

Representation zeckendorf_greedy(std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  const SequenceDef std_def = SequenceDef::standard();
  // Terms up to the largest one not exceeding n.
  const auto terms = gh_prefix(std_def, search_bound(std_def, n));
  std::size_t top = terms.size() - 1;
  while (terms[top] > n) --top;

  Representation rep;
  rep.bits.assign(top + 1, false);
  std::int64_t remainder = n;
  for (std::size_t i = top + 1; i-- > 0 && remainder > 0;) {
    if (terms[i] <= remainder) {
      rep.bits[i] = true;
      remainder -= terms[i];
    }
  }
  return rep;
}

namespace {

// Depth-first search over nonconsecutive subsets, top index downwards.
// reach_max[i] / reach_min[i] bound the sums achievable from indices 0..i,
// which prunes everything that cannot land on the target.
class Enumerator {
public:
  Enumerator(std::int64_t n, const SequenceDef& def) : n_(n) {
    const std::size_t bound = search_bound(def, n);
    require_coding_valid(def, bound);
    terms_ = gh_prefix(def, bound);

    reach_max_.resize(terms_.size());
    reach_min_.resize(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const std::int64_t take = std::max<std::int64_t>(terms_[i], 0);
      const std::int64_t skip_prev = i >= 1 ? reach_max_[i - 1] : 0;
      const std::int64_t take_prev = i >= 2 ? reach_max_[i - 2] : 0;
      reach_max_[i] = std::max(skip_prev, take + take_prev);
      reach_min_[i] = std::min<std::int64_t>(terms_[0], 0);
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    for (std::size_t top = 0; top < terms_.size(); ++top) {
      bits_.assign(top + 1, false);
      bits_[top] = true;
      descend(static_cast<std::ptrdiff_t>(top) - 2, n_ - terms_[top], visit);
    }
  }

private:
  template <class Visit>
  void descend(std::ptrdiff_t i, std::int64_t remaining, Visit& visit) {
    if (i < 0) {
      if (remaining == 0) visit(bits_);
      return;
    }
    const auto idx = static_cast<std::size_t>(i);
    if (remaining > reach_max_[idx] || remaining < reach_min_[idx]) return;
    descend(i - 1, remaining, visit);
    bits_[idx] = true;
    descend(i - 2, remaining - terms_[idx], visit);
    bits_[idx] = false;
  }

  std::int64_t n_;
  std::vector<std::int64_t> terms_;
  std::vector<std::int64_t> reach_max_;
  std::vector<std::int64_t> reach_min_;
  std::vector<bool> bits_;
};

}  // namespace

std::vector<Representation> enumerate_representations(std::int64_t n, const SequenceDef& def,
                                                      std::optional<std::size_t> limit) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<Representation> out;
  Enumerator(n, def).run([&](const std::vector<bool>& bits) { out.push_back({bits}); });

  // Tops are visited in ascending order, so a stable sort on the bits within
  // each top yields the full ordering.
  std::stable_sort(out.begin(), out.end(), [](const Representation& l, const Representation& r) {
    if (l.bits.size() != r.bits.size()) return l.bits.size() < r.bits.size();
    return l.bits < r.bits;
  });
  if (limit && out.size() > *limit) out.resize(*limit);
  return out;
}

std::size_t representation_count(std::int64_t n, const SequenceDef& def) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  std::size_t count = 0;
  Enumerator(n, def).run([&](const std::vector<bool>&) { ++count; });
  return count;
}

std::vector<std::int64_t> feasibility_scan(const SequenceDef& def, std::int64_t max_n) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "range bound must be positive");
  std::vector<std::int64_t> missing;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    if (representation_count(n, def) == 0) missing.push_back(n);
  }
  return missing;
}

std::map<std::size_t, std::size_t> uniqueness_profile(const SequenceDef& def, std::int64_t max_n) {
  if (max_n < 1) throw Error(ErrorCode::InvalidArgument, "range bound must be positive");
  std::map<std::size_t, std::size_t> histogram;
  for (std::int64_t n = 1; n <= max_n; ++n) ++histogram[representation_count(n, def)];
  return histogram;
}

}  // namespace ghcode
