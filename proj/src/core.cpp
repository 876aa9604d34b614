#include "satlattice/core.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace satlattice {

int popcount(SetWord s) { return std::popcount(s); }

std::vector<int> elements_of(SetWord s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(s)));
  while (s != 0) {
    int bit = std::countr_zero(s);
    out.push_back(bit + 1);
    s &= s - 1;
  }
  return out;
}

SetWord set_of(const std::vector<int>& elements, int n) {
  require_ground_size(n);
  SetWord s = 0;
  for (int e : elements) {
    if (e < 1 || e > n)
      throw std::invalid_argument("element " + std::to_string(e) +
                                  " outside ground set [" + std::to_string(n) + "]");
    s |= singleton(e);
  }
  return s;
}

void require_ground_size(int n) {
  if (n < 1 || n > kMaxGroundSize)
    throw std::invalid_argument("ground size must be in [1, " +
                                std::to_string(kMaxGroundSize) + "], got " +
                                std::to_string(n));
}

SetWord chain_set(int i, int n) {
  require_ground_size(n);
  if (i < 0 || i > n)
    throw std::invalid_argument("chain index must be in [0, " + std::to_string(n) +
                                "], got " + std::to_string(i));
  return full_set(i);
}

SetWord shackle_set(int i, int n) {
  require_ground_size(n);
  if (i < 1 || i > n - 1)
    throw std::invalid_argument("shackle index must be in [1, " +
                                std::to_string(n - 1) + "], got " + std::to_string(i));
  return full_set(i - 1) | singleton(i + 1);
}

int shackle_index(SetWord s, int n) {
  int t = std::countr_one(s);
  int i = t + 1;
  if (i > n - 1) return 0;
  return s == shackle_set(i, n) ? i : 0;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  int n = static_cast<int>(image_.size());
  require_ground_size(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("image is not a permutation of 1..n");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(image));
}

SetWord Permutation::apply(SetWord s) const {
  SetWord out = 0;
  while (s != 0) {
    int bit = std::countr_zero(s);
    out |= singleton(image_[static_cast<std::size_t>(bit)]);
    s &= s - 1;
  }
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i] - 1)] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Family::Family(int n, std::vector<SetWord> members)
    : n_(n), members_(std::move(members)) {
  require_ground_size(n_);
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() > full_set(n_))
    throw std::invalid_argument("family member exceeds the ground set");
}

bool Family::contains(SetWord s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

Family Family::with(SetWord s) const {
  std::vector<SetWord> m = members_;
  m.push_back(s);
  return Family(n_, std::move(m));
}

Family Family::without(SetWord s) const {
  std::vector<SetWord> m;
  m.reserve(members_.size());
  for (SetWord w : members_)
    if (w != s) m.push_back(w);
  return Family(n_, std::move(m));
}

Family canonical_chain(int n) {
  require_ground_size(n);
  std::vector<SetWord> m;
  m.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) m.push_back(full_set(i));
  return Family(n, std::move(m));
}

bool contains_canonical_chain(const Family& f) {
  for (int i = 0; i <= f.ground_size(); ++i)
    if (!f.contains(full_set(i))) return false;
  return true;
}

SetWord dual_set(SetWord s, int n) {
  SetWord comp = ~s & full_set(n);
  SetWord out = 0;
  while (comp != 0) {
    int bit = std::countr_zero(comp);
    out |= singleton(n - bit);  // element bit+1 -> n - bit
    comp &= comp - 1;
  }
  return out;
}

Family dual(const Family& f) {
  std::vector<SetWord> m;
  m.reserve(f.size());
  for (SetWord s : f.members()) m.push_back(dual_set(s, f.ground_size()));
  return Family(f.ground_size(), std::move(m));
}

Family relabel(const Family& f, const Permutation& sigma) {
  if (sigma.degree() != f.ground_size())
    throw std::invalid_argument("permutation degree does not match ground size");
  std::vector<SetWord> m;
  m.reserve(f.size());
  for (SetWord s : f.members()) m.push_back(sigma.apply(s));
  return Family(f.ground_size(), std::move(m));
}

}  // namespace satlattice
