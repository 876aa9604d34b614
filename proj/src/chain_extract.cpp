#include "satlattice/chain_extract.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "satlattice/freeness.hpp"
#include "satlattice/text.hpp"

namespace satlattice {

TrichotomyViolation::TrichotomyViolation(SetWord first, SetWord second)
    : std::runtime_error("downsets of " + render_set(first) + " and " +
                         render_set(second) + " are not nested either way"),
      first_(first),
      second_(second) {}

ExtractionError::ExtractionError(std::string message, SetWord gap_low,
                                 SetWord gap_high, std::optional<SetWord> missing)
    : std::runtime_error(std::move(message)),
      gap_low_(gap_low),
      gap_high_(gap_high),
      missing_(missing) {}

Family downset(const Family& f, SetWord s) {
  std::vector<SetWord> m;
  for (SetWord w : f.members())
    if (strict_subset(w, s)) m.push_back(w);
  return Family(f.ground_size(), std::move(m));
}

namespace {

// downs[i]: bitset over member indices of the open downset of member i.
std::vector<std::vector<std::uint64_t>> downset_bits(const Family& f) {
  const auto& m = f.members();
  std::size_t count = m.size();
  std::size_t blocks = (count + 63) / 64;
  if (blocks == 0) blocks = 1;
  std::vector<std::vector<std::uint64_t>> downs(count,
                                                std::vector<std::uint64_t>(blocks, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      if (strict_subset(m[j], m[i])) downs[i][j / 64] |= std::uint64_t{1} << (j % 64);
  return downs;
}

bool bits_subset(const std::vector<std::uint64_t>& a,
                 const std::vector<std::uint64_t>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if ((a[k] & ~b[k]) != 0) return false;
  return true;
}

std::size_t bits_count(const std::vector<std::uint64_t>& a) {
  std::size_t c = 0;
  for (std::uint64_t w : a) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace

TrichotomyResult downset_trichotomy(const Family& f) {
  const auto& m = f.members();
  auto downs = downset_bits(f);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!bits_subset(downs[i], downs[j]) && !bits_subset(downs[j], downs[i]))
        return {false, m[i], m[j]};
  return {true, 0, 0};
}

std::vector<SetWord> linear_extension_of_downset_preorder(const Family& f) {
  const auto& m = f.members();
  auto downs = downset_bits(f);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!bits_subset(downs[i], downs[j]) && !bits_subset(downs[j], downs[i]))
        throw TrichotomyViolation(m[i], m[j]);

  // Nested downsets make (size desc, word asc) a valid extension: a strictly
  // larger downset has strictly more members, equal sizes mean equal sets.
  std::vector<std::size_t> idx(m.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<std::size_t> sizes(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) sizes[i] = bits_count(downs[i]);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (sizes[a] != sizes[b]) return sizes[a] > sizes[b];
    return m[a] < m[b];
  });
  std::vector<SetWord> out;
  out.reserve(m.size());
  for (std::size_t i : idx) out.push_back(m[i]);
  return out;
}

ChainExtraction extract_maximal_chain(const Family& f, bool verify) {
  int n = f.ground_size();
  if (verify && !is_saturated(f))
    throw ExtractionError("family is not induced-2C2-saturated", 0, full_set(n),
                          std::nullopt);

  ExtractionTrace trace;
  trace.order = linear_extension_of_downset_preorder(f);
  if (trace.order.empty())
    throw ExtractionError("family is empty", 0, full_set(n), std::nullopt);

  trace.g_seq.reserve(trace.order.size());
  SetWord g = trace.order.front();
  for (SetWord w : trace.order) {
    g &= w;
    trace.g_seq.push_back(g);
  }

  if (trace.order.front() != full_set(n))
    throw ExtractionError("family does not contain the full set", trace.order.front(),
                          full_set(n), full_set(n));
  if (trace.g_seq.back() != 0)
    throw ExtractionError("intersections never reach the empty set",
                          trace.g_seq.back(), full_set(n), 0);

  // Walk each strict gap top-down, dropping the largest surplus element at a
  // time; every intermediate set must be a member.
  std::vector<SetWord> chain_sets;
  chain_sets.push_back(full_set(n));
  SetWord top = full_set(n);
  for (SetWord next : trace.g_seq) {
    if (next == top) continue;
    SetWord cur = top;
    while (cur != next) {
      SetWord surplus = cur & ~next;
      int drop = 31 - std::countl_zero(surplus);  // highest surplus bit
      cur &= ~(SetWord{1} << drop);
      if (!f.contains(cur))
        throw ExtractionError("gap interval [" + render_set(next) + ", " +
                                  render_set(top) + ") leaves the family at " +
                                  render_set(cur),
                              next, top, cur);
      chain_sets.push_back(cur);
    }
    top = next;
  }

  ChainExtraction out;
  out.chain = Family(n, std::move(chain_sets));
  if (out.chain.size() != static_cast<std::size_t>(n) + 1)
    throw ExtractionError("extracted chain is not maximal", 0, full_set(n),
                          std::nullopt);
  trace.chain = out.chain;
  out.trace = std::move(trace);
  return out;
}

}  // namespace satlattice
