#include "satlattice/freeness.hpp"

#include <bit>
#include <stdexcept>

namespace satlattice {

namespace {

InducedCopy make_copy(SetWord x, SetWord y, SetWord u, SetWord v) {
  if (!subset_eq(x, y)) std::swap(x, y);
  if (!subset_eq(u, v)) std::swap(u, v);
  if (u < x) {
    std::swap(x, u);
    std::swap(y, v);
  }
  return InducedCopy{x, y, u, v};
}

}  // namespace

RelationIndex::RelationIndex(const Family& f) : members_(f.members()) {
  std::size_t m = members_.size();
  blocks_ = (m + 63) / 64;
  if (blocks_ == 0) blocks_ = 1;
  comp_.assign(m * blocks_, 0);
  sup_.assign(m * blocks_, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      // members are sorted by word value, so i < j rules out members[j] ⊊ members[i]
      if (subset_eq(members_[i], members_[j])) {
        comp_[i * blocks_ + j / 64] |= Block{1} << (j % 64);
        comp_[j * blocks_ + i / 64] |= Block{1} << (i % 64);
        sup_[i * blocks_ + j / 64] |= Block{1} << (j % 64);
      }
    }
  }
}

void RelationIndex::incomparable_to_both(const Block* p, const Block* q,
                                         std::vector<Block>& out) const {
  std::size_t m = members_.size();
  out.resize(blocks_);
  for (std::size_t b = 0; b < blocks_; ++b) out[b] = ~(p[b] | q[b]);
  // mask tail bits beyond m
  std::size_t tail = m % 64;
  if (tail != 0) out[blocks_ - 1] &= (Block{1} << tail) - 1;
}

bool RelationIndex::related_pair_inside(const std::vector<Block>& bits, std::size_t& lo,
                                        std::size_t& hi) const {
  for (std::size_t b = 0; b < blocks_; ++b) {
    Block w = bits[b];
    while (w != 0) {
      std::size_t u = b * 64 + static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      const Block* su = sup(u);
      for (std::size_t c = 0; c < blocks_; ++c) {
        Block hit = su[c] & bits[c];
        if (hit != 0) {
          lo = u;
          hi = c * 64 + static_cast<std::size_t>(std::countr_zero(hit));
          return true;
        }
      }
    }
  }
  return false;
}

std::optional<InducedCopy> RelationIndex::any_copy() const {
  std::size_t m = members_.size();
  std::vector<Block> cand;
  for (std::size_t i = 0; i < m; ++i) {
    const Block* si = sup(i);
    for (std::size_t b = 0; b < blocks_; ++b) {
      Block w = si[b];
      while (w != 0) {
        std::size_t j = b * 64 + static_cast<std::size_t>(std::countr_zero(w));
        w &= w - 1;
        incomparable_to_both(comp(i), comp(j), cand);
        // i and j are related so their bits are already cleared in cand
        std::size_t u, v;
        if (related_pair_inside(cand, u, v))
          return make_copy(members_[i], members_[j], members_[u], members_[v]);
      }
    }
  }
  return std::nullopt;
}

std::optional<InducedCopy> RelationIndex::copy_with(SetWord x) const {
  std::size_t m = members_.size();
  std::vector<Block> compx(blocks_, 0);
  for (std::size_t t = 0; t < m; ++t)
    if (related(x, members_[t])) compx[t / 64] |= Block{1} << (t % 64);

  std::vector<Block> cand;
  for (std::size_t b = 0; b < blocks_; ++b) {
    Block w = compx[b];
    while (w != 0) {
      std::size_t t = b * 64 + static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      incomparable_to_both(compx.data(), comp(t), cand);
      std::size_t u, v;
      if (related_pair_inside(cand, u, v))
        return make_copy(x, members_[t], members_[u], members_[v]);
    }
  }
  return std::nullopt;
}

std::optional<InducedCopy> RelationIndex::copy_with_using(SetWord x,
                                                          std::size_t idx) const {
  std::size_t m = members_.size();
  SetWord y = members_[idx];
  std::vector<Block> compx(blocks_, 0);
  for (std::size_t t = 0; t < m; ++t)
    if (related(x, members_[t])) compx[t / 64] |= Block{1} << (t % 64);

  std::vector<Block> cand;
  if (related(x, y)) {
    // (x, y) is one edge; look for another edge avoiding both.
    incomparable_to_both(compx.data(), comp(idx), cand);
    std::size_t u, v;
    if (related_pair_inside(cand, u, v))
      return make_copy(x, y, members_[u], members_[v]);
    return std::nullopt;
  }
  // y sits in the other pair: find w ~ y and z ~ x with {y,w} ∥ {z,x}.
  for (std::size_t w = 0; w < m; ++w) {
    if (w == idx) continue;
    bool w_comp_y = (comp(idx)[w / 64] >> (w % 64)) & 1;
    bool w_comp_x = (compx[w / 64] >> (w % 64)) & 1;
    if (!w_comp_y || w_comp_x) continue;
    for (std::size_t b = 0; b < blocks_; ++b) {
      Block zbits = compx[b] & ~comp(idx)[b] & ~comp(w)[b];
      if (zbits != 0) {
        std::size_t z = b * 64 + static_cast<std::size_t>(std::countr_zero(zbits));
        return make_copy(y, members_[w], x, members_[z]);
      }
    }
  }
  return std::nullopt;
}

std::optional<InducedCopy> find_induced_copy(const Family& f) {
  return RelationIndex(f).any_copy();
}

std::optional<InducedCopy> find_induced_copy_with(const Family& f, SetWord s) {
  if (f.contains(s))
    throw std::invalid_argument("set is already a member of the family");
  return RelationIndex(f).copy_with(s);
}

bool is_free(const Family& f) { return !find_induced_copy(f).has_value(); }

bool is_saturated(const Family& f) { return check_saturation(f).saturated; }

SaturationCheck check_saturation(const Family& f) {
  SaturationCheck result;
  RelationIndex index(f);
  result.internal_copy = index.any_copy();
  result.free = !result.internal_copy.has_value();
  if (!result.free) return result;
  SetWord top = full_set(f.ground_size());
  for (SetWord s = 0; s <= top; ++s) {
    if (f.contains(s)) continue;
    if (!index.copy_with(s).has_value()) {
      result.unwitnessed_outsider = s;
      return result;
    }
  }
  result.saturated = true;
  return result;
}

}  // namespace satlattice
