#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "satlattice/core.hpp"

namespace satlattice {

/// Certificate for one induced 2C2: a ⊊ a_up, b ⊊ b_up, and each of
/// {a, a_up} incomparable to each of {b, b_up}.
struct InducedCopy {
  SetWord a = 0, a_up = 0, b = 0, b_up = 0;
  bool operator==(const InducedCopy&) const = default;
  bool uses(SetWord s) const { return a == s || a_up == s || b == s || b_up == s; }
};

constexpr bool related(SetWord x, SetWord y) {
  return subset_eq(x, y) || subset_eq(y, x);
}
constexpr bool incomparable(SetWord x, SetWord y) { return !related(x, y); }

constexpr bool is_induced_2c2(SetWord a, SetWord a_up, SetWord b, SetWord b_up) {
  return strict_subset(a, a_up) && strict_subset(b, b_up) && incomparable(a, b) &&
         incomparable(a, b_up) && incomparable(a_up, b) && incomparable(a_up, b_up);
}

/// Pairwise relations of a fixed member list, as bitsets over member indices.
/// Incomparability filters and "is there a related pair inside this index
/// set" queries become word operations; this is the kernel the enumeration
/// search and the saturation sweep call millions of times.
class RelationIndex {
 public:
  explicit RelationIndex(const Family& f);

  std::optional<InducedCopy> any_copy() const;

  /// A copy inside members ∪ {x} that uses x; x must not be a member.
  std::optional<InducedCopy> copy_with(SetWord x) const;

  /// A copy inside members ∪ {x} that uses both x and members[idx].
  std::optional<InducedCopy> copy_with_using(SetWord x, std::size_t idx) const;

 private:
  using Block = std::uint64_t;

  std::size_t blocks() const { return blocks_; }
  const Block* comp(std::size_t i) const { return comp_.data() + i * blocks_; }
  const Block* sup(std::size_t i) const { return sup_.data() + i * blocks_; }
  bool related_pair_inside(const std::vector<Block>& bits, std::size_t& lo,
                           std::size_t& hi) const;
  void incomparable_to_both(const Block* p, const Block* q,
                            std::vector<Block>& out) const;

  std::vector<SetWord> members_;
  std::size_t blocks_ = 0;
  std::vector<Block> comp_;  // comp_[i]: indices related to member i (self excluded)
  std::vector<Block> sup_;   // sup_[i]: indices of strict supersets of member i
};

/// Some induced 2C2 with all four members in f, or nullopt when f is free.
std::optional<InducedCopy> find_induced_copy(const Family& f);

/// A copy inside f ∪ {s} that uses s; requires s ∉ f.
std::optional<InducedCopy> find_induced_copy_with(const Family& f, SetWord s);

bool is_free(const Family& f);
bool is_saturated(const Family& f);

struct SaturationCheck {
  bool free = false;
  bool saturated = false;
  std::optional<InducedCopy> internal_copy;     // present when !free
  std::optional<SetWord> unwitnessed_outsider;  // present when free && !saturated
};

/// Freeness plus the full outsider sweep, with a failure witness either way.
SaturationCheck check_saturation(const Family& f);

}  // namespace satlattice
