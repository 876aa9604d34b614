#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "satlattice/chain_extract.hpp"
#include "satlattice/core.hpp"
#include "satlattice/freeness.hpp"
#include "satlattice/search.hpp"

using namespace satlattice;

namespace {

Family chain_plus(int n, std::vector<SetWord> extra) {
  Family chain = canonical_chain(n);
  for (SetWord s : chain.members()) extra.push_back(s);
  return Family(n, std::move(extra));
}

bool is_maximal_chain_in(const Family& chain, const Family& f) {
  int n = f.ground_size();
  if (chain.size() != std::size_t(n) + 1) return false;
  const auto& m = chain.members();
  if (m.front() != 0 || m.back() != full_set(n)) return false;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    if (!strict_subset(m[i], m[i + 1])) return false;
    if (popcount(m[i + 1]) != popcount(m[i]) + 1) return false;
  }
  for (SetWord s : m)
    if (!f.contains(s)) return false;
  return true;
}

// Whenever consecutive intersections differ, the whole half-open interval
// [g_next, g_prev) must lie inside the family.
void check_gap_intervals(const Family& f, const ExtractionTrace& trace) {
  for (std::size_t j = 0; j + 1 < trace.g_seq.size(); ++j) {
    SetWord hi = trace.g_seq[j], lo = trace.g_seq[j + 1];
    if (hi == lo) continue;
    REQUIRE(strict_subset(lo, hi));
    SetWord diff = hi & ~lo;
    // walk all subsets of the difference, skipping the full one
    for (SetWord sub = diff;; sub = (sub - 1) & diff) {
      if (sub != diff) CHECK(f.contains(lo | sub));
      if (sub == 0) break;
    }
  }
}

}  // namespace

TEST_CASE("downset") {
  CHECK(downset(canonical_chain(4), set_of({1, 2}, 4)) ==
        Family(4, {0, set_of({1}, 4)}));
  CHECK(downset(canonical_chain(4), 0).empty());
  Family f = chain_plus(3, {set_of({2}, 3), set_of({1, 3}, 3)});
  CHECK(downset(f, set_of({1, 3}, 3)) == Family(3, {0, set_of({1}, 3)}));
}

TEST_CASE("downset trichotomy") {
  CHECK(downset_trichotomy(canonical_chain(5)).holds);
  CHECK(downset_trichotomy(chain_plus(3, {set_of({2}, 3), set_of({1, 3}, 3)})).holds);

  Family bad(3, {set_of({1}, 3), set_of({1, 3}, 3), set_of({2}, 3),
                 set_of({2, 3}, 3)});
  TrichotomyResult r = downset_trichotomy(bad);
  CHECK(!r.holds);
  CHECK(r.first == set_of({1, 3}, 3));
  CHECK(r.second == set_of({2, 3}, 3));

  // guaranteed for free families
  std::mt19937 rng(29);
  std::uniform_int_distribution<SetWord> word_dist(0, full_set(5));
  int checked = 0;
  for (int trial = 0; trial < 2000 && checked < 150; ++trial) {
    std::vector<SetWord> members;
    for (int i = 0; i < 9; ++i) members.push_back(word_dist(rng));
    Family f(5, std::move(members));
    if (!is_free(f)) continue;
    ++checked;
    CHECK(downset_trichotomy(f).holds);
  }
  CHECK(checked >= 100);
}

TEST_CASE("linear extension of the downset preorder") {
  auto order = linear_extension_of_downset_preorder(canonical_chain(3));
  CHECK(order == std::vector<SetWord>{7, 3, 1, 0});

  // tie between {1} and {2} broken by word value, read from the top
  Family f = chain_plus(3, {set_of({2}, 3)});
  order = linear_extension_of_downset_preorder(f);
  CHECK(order == std::vector<SetWord>{7, 3, 1, 2, 0});

  Family bad(3, {set_of({1}, 3), set_of({1, 3}, 3), set_of({2}, 3),
                 set_of({2, 3}, 3)});
  CHECK_THROWS_AS(linear_extension_of_downset_preorder(bad), TrichotomyViolation);

  // the order respects the preorder on every saturated n=4 family
  for (const Family& fam : enumerate_at(4, 8).families) {
    auto ext = linear_extension_of_downset_preorder(fam);
    for (std::size_t i = 0; i + 1 < ext.size(); ++i) {
      Family d_hi = downset(fam, ext[i]);
      Family d_lo = downset(fam, ext[i + 1]);
      CHECK(std::includes(d_hi.members().begin(), d_hi.members().end(),
                          d_lo.members().begin(), d_lo.members().end()));
    }
  }
}

TEST_CASE("extract_maximal_chain on chain plus singletons") {
  Family f = chain_plus(4, {set_of({2}, 4), set_of({3}, 4), set_of({4}, 4)});
  ChainExtraction ext = extract_maximal_chain(f);
  CHECK(is_maximal_chain_in(ext.chain, f));

  auto all_chains = oracle::maximal_chains_inside(f);
  CHECK(all_chains.size() == 2);  // via {1} and via {2}
  std::vector<SetWord> got = ext.chain.members();
  CHECK(std::find(all_chains.begin(), all_chains.end(), got) != all_chains.end());
  check_gap_intervals(f, ext.trace);
}

TEST_CASE("extract_maximal_chain on the bare chain") {
  for (int n = 1; n <= 8; ++n) {
    ChainExtraction ext = extract_maximal_chain(canonical_chain(n));
    CHECK(ext.chain == canonical_chain(n));
  }
}

TEST_CASE("extraction under random relabelings of catalog families") {
  std::mt19937 rng(31);
  for (int n : {3, 4}) {
    Catalog catalog = enumerate_at(n, 2 * n);
    for (const Family& f : catalog.families) {
      std::vector<int> image(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
      std::shuffle(image.begin(), image.end(), rng);
      Family g = relabel(f, Permutation(image));
      ChainExtraction ext = extract_maximal_chain(g, /*verify=*/true);
      CHECK(is_maximal_chain_in(ext.chain, g));
      check_gap_intervals(g, ext.trace);
      // g_seq is decreasing under inclusion
      for (std::size_t j = 0; j + 1 < ext.trace.g_seq.size(); ++j)
        CHECK(subset_eq(ext.trace.g_seq[j + 1], ext.trace.g_seq[j]));
    }
  }
}

TEST_CASE("extraction errors carry the failing gap") {
  // free but unsaturated, with a genuine hole between {1} and {1,2,3}
  Family f(4, {0, set_of({1}, 4), set_of({1, 2, 3}, 4), full_set(4)});
  try {
    extract_maximal_chain(f);
    CHECK(false);
  } catch (const ExtractionError& e) {
    CHECK(e.gap_low() == set_of({1}, 4));
    CHECK(e.gap_high() == set_of({1, 2, 3}, 4));
    REQUIRE(e.missing().has_value());
    CHECK(!f.contains(*e.missing()));
    CHECK(strict_subset(e.gap_low(), *e.missing()));
    CHECK(strict_subset(*e.missing(), e.gap_high()));
  }

  // verify flag rejects unsaturated input up front
  CHECK_THROWS_AS(extract_maximal_chain(canonical_chain(3), /*verify=*/true),
                  ExtractionError);

  // family without the empty set cannot reach the bottom
  Family no_bottom(3, {set_of({1}, 3), set_of({1, 2}, 3), full_set(3)});
  CHECK_THROWS_AS(extract_maximal_chain(no_bottom), ExtractionError);
}
