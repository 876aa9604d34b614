#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace satlattice {

/// One subset of [n] packed into a machine word: element i lives at bit i-1.
using SetWord = std::uint32_t;

/// Largest supported ground size; every SetWord fits one 32-bit word.
inline constexpr int kMaxGroundSize = 20;

inline constexpr const char* kToolVersion = "0.1.0";

constexpr SetWord full_set(int n) { return (SetWord{1} << n) - 1u; }
constexpr SetWord singleton(int i) { return SetWord{1} << (i - 1); }
constexpr bool has_element(SetWord s, int i) { return (s >> (i - 1)) & 1u; }

constexpr bool subset_eq(SetWord a, SetWord b) { return (a & ~b) == 0; }
constexpr bool strict_subset(SetWord a, SetWord b) { return a != b && subset_eq(a, b); }

int popcount(SetWord s);

/// Elements of s in increasing order (1-based).
std::vector<int> elements_of(SetWord s);
SetWord set_of(const std::vector<int>& elements, int n);

void require_ground_size(int n);

/// C_i = {1,...,i}; C_0 = empty set.
SetWord chain_set(int i, int n);

/// S_i = [i-1] ∪ {i+1}, defined for 1 <= i <= n-1.
/// Incomparable to C_i and related to every other chain set.
SetWord shackle_set(int i, int n);

/// True iff s equals C_i for some i (s is a prefix mask).
constexpr bool is_chain_set(SetWord s) { return (s & (s + 1)) == 0; }

/// Index i with s == S_i, or 0 if s is not a shackle of B_n.
int shackle_index(SetWord s, int n);

/// A bijection of {1..n}; image[i-1] is where element i goes.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int apply(int element) const { return image_[element - 1]; }
  SetWord apply(SetWord s) const;
  Permutation inverse() const;
  const std::vector<int>& image() const { return image_; }

 private:
  std::vector<int> image_;
};

/// A finite family of subsets of [n], stored strictly sorted by word value.
/// That order is the canonical form used for equality, hashing and catalogs.
class Family {
 public:
  Family() = default;
  Family(int n, std::vector<SetWord> members);

  int ground_size() const { return n_; }
  const std::vector<SetWord>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(SetWord s) const;

  Family with(SetWord s) const;
  Family without(SetWord s) const;

  bool operator==(const Family&) const = default;
  friend bool operator<(const Family& a, const Family& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.members_ < b.members_;
  }

 private:
  int n_ = 0;
  std::vector<SetWord> members_;
};

/// The canonical maximal chain C_0 ⊂ C_1 ⊂ ... ⊂ C_n.
Family canonical_chain(int n);
bool contains_canonical_chain(const Family& f);

/// Order-reversing self-map of B_n: complement, then relabel i -> n+1-i.
/// An involution that maps the canonical chain onto itself.
SetWord dual_set(SetWord s, int n);
Family dual(const Family& f);

/// Element-wise relabeling; preserves all comparabilities up to the
/// induced index permutation.
Family relabel(const Family& f, const Permutation& sigma);

}  // namespace satlattice
