#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "satlattice/core.hpp"
#include "satlattice/search.hpp"
#include "satlattice/text.hpp"
#include "satlattice/witness.hpp"

using namespace satlattice;

namespace {

Family chain_plus(int n, std::vector<SetWord> extra) {
  Family chain = canonical_chain(n);
  for (SetWord s : chain.members()) extra.push_back(s);
  return Family(n, std::move(extra));
}

// Definition-level load: i is in the load of x iff some 4-subset of
// F ∪ {S_i} containing both x and S_i is an induced copy.
std::vector<int> oracle_load(const Family& f, SetWord x) {
  int n = f.ground_size();
  std::vector<int> out;
  for (int i = 1; i <= n - 1; ++i) {
    SetWord si = shackle_set(i, n);
    if (f.contains(si)) continue;
    Family extended = f.with(si);
    const auto& m = extended.members();
    bool found = false;
    for (std::size_t a = 0; a < m.size() && !found; ++a)
      for (std::size_t b = a + 1; b < m.size() && !found; ++b)
        for (std::size_t c = b + 1; c < m.size() && !found; ++c)
          for (std::size_t d = c + 1; d < m.size() && !found; ++d) {
            std::vector<SetWord> quad{m[a], m[b], m[c], m[d]};
            if (std::find(quad.begin(), quad.end(), x) == quad.end()) continue;
            if (std::find(quad.begin(), quad.end(), si) == quad.end()) continue;
            if (oracle::is_2c2(quad)) found = true;
          }
    if (found) out.push_back(i);
  }
  return out;
}

}  // namespace

TEST_CASE("span") {
  SpanInfo s = span(set_of({2}, 4), 4);
  CHECK(s.p == 0);
  CHECK(s.q == 2);

  s = span(shackle_set(2, 5), 5);
  CHECK(s.p == 1);
  CHECK(s.q == 3);  // q = p + 2 characterizes shackles

  s = span(set_of({2, 5}, 5), 5);
  CHECK(s.p == 0);
  CHECK(s.q == 5);

  CHECK_THROWS_AS(span(set_of({1, 2}, 4), 4), std::invalid_argument);
  CHECK_THROWS_AS(span(0, 4), std::invalid_argument);

  // q = p+2 exactly for shackles, q >= p+3 otherwise; 0 <= p < q <= n
  for (int n = 2; n <= 10; ++n)
    for (SetWord w = 1; w < full_set(n); ++w) {
      if (is_chain_set(w)) continue;
      SpanInfo info = span(w, n);
      CHECK(0 <= info.p);
      CHECK(info.p < info.q);
      CHECK(info.q <= n);
      if (shackle_index(w, n) != 0)
        CHECK(info.q == info.p + 2);
      else
        CHECK(info.q >= info.p + 3);
    }
}

TEST_CASE("classify_related_pair") {
  SUBCASE("chain strictly between") {
    Family f = chain_plus(4, {set_of({2}, 4), set_of({1, 2, 4}, 4)});
    PairClassification c =
        classify_related_pair(f, set_of({1, 2, 4}, 4), set_of({2}, 4));
    CHECK(c.kind == PairClassification::Kind::chain_between);
    CHECK(c.j == 2);
    CHECK(c.j_a == 2);
    CHECK(c.j_b == 2);
    CHECK(strict_subset(set_of({2}, 4), chain_set(c.j, 4)));
    CHECK(strict_subset(chain_set(c.j, 4), set_of({1, 2, 4}, 4)));
  }

  SUBCASE("shackle sandwich") {
    Family f = chain_plus(3, {set_of({2}, 3), set_of({2, 3}, 3)});
    PairClassification c =
        classify_related_pair(f, set_of({2, 3}, 3), set_of({2}, 3));
    CHECK(c.kind == PairClassification::Kind::shackle_sandwich);
    CHECK(c.j == 1);
    SetWord sj = shackle_set(c.j, 3);
    CHECK(subset_eq(set_of({2}, 3), sj));
    CHECK(subset_eq(sj, set_of({2, 3}, 3)));
    CHECK(incomparable(chain_set(c.j, 3), set_of({2}, 3)));
    CHECK(incomparable(chain_set(c.j, 3), set_of({2, 3}, 3)));
  }

  SUBCASE("impossible gap reports a contradiction") {
    // only realizable inside a non-free family
    Family f = chain_plus(5, {set_of({3}, 5), set_of({3, 4}, 5)});
    PairClassification c =
        classify_related_pair(f, set_of({3, 4}, 5), set_of({3}, 5));
    CHECK(c.kind == PairClassification::Kind::contradiction);
    CHECK(c.j_b - c.j_a >= 3);
    CHECK(!c.detail.empty());
  }

  SUBCASE("argument validation") {
    Family f = chain_plus(4, {set_of({2}, 4), set_of({1, 2, 4}, 4)});
    CHECK_THROWS_AS(classify_related_pair(f, set_of({2}, 4), set_of({1, 2, 4}, 4)),
                    std::invalid_argument);  // not nested that way
    CHECK_THROWS_AS(classify_related_pair(f, set_of({1, 2}, 4), set_of({2}, 4)),
                    std::invalid_argument);  // chain member
    CHECK_THROWS_AS(
        classify_related_pair(f, set_of({1, 2, 4}, 4), set_of({4}, 4)),
        std::invalid_argument);  // {4} not in the family
  }

  SUBCASE("no contradictions across the small catalogs") {
    for (int n : {3, 4}) {
      for (const Family& f : enumerate_at(n, 2 * n).families) {
        for (SetWord a : f.members()) {
          if (is_chain_set(a)) continue;
          for (SetWord b : f.members()) {
            if (is_chain_set(b) || !strict_subset(b, a)) continue;
            PairClassification c = classify_related_pair(f, a, b);
            CHECK(c.kind != PairClassification::Kind::contradiction);
            if (c.kind == PairClassification::Kind::shackle_sandwich) {
              // exactly one sandwich index exists
              int hits = 0;
              for (int j = 1; j <= n - 1; ++j) {
                SetWord sj = shackle_set(j, n);
                if (subset_eq(b, sj) && subset_eq(sj, a) &&
                    incomparable(chain_set(j, n), a) &&
                    incomparable(chain_set(j, n), b))
                  ++hits;
              }
              CHECK(hits == 1);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("witness_configs argument errors") {
  Family f3 = chain_plus(3, {set_of({2}, 3), set_of({1, 3}, 3)});
  CHECK_THROWS_AS(witness_configs(f3, 1), std::invalid_argument);  // S_1 present
  CHECK_THROWS_AS(witness_configs(f3, 2), std::invalid_argument);  // S_2 present
  CHECK_THROWS_AS(witness_configs(f3, 0), std::invalid_argument);

  Family f4 = chain_plus(4, {set_of({2}, 4), set_of({3}, 4), set_of({1, 2, 4}, 4)});
  CHECK_THROWS_AS(witness_configs(f4, 1), std::invalid_argument);  // S_1 = {2}
  CHECK_THROWS_AS(witness_configs(f4, 3), std::invalid_argument);  // S_3 = {1,2,4}

  Family no_chain(4, {0, set_of({2}, 4), full_set(4)});
  CHECK_THROWS_AS(witness_configs(no_chain, 2), std::invalid_argument);

  // a bare chain has a missing shackle with no witnesses at all
  CHECK_THROWS_AS(witness_configs(canonical_chain(3), 1), NotSaturatedError);
}

TEST_CASE("witness_configs on a catalog family") {
  Family f = chain_plus(4, {set_of({2}, 4), set_of({3}, 4), set_of({1, 2, 4}, 4)});
  auto configs = witness_configs(f, 2);  // S_2 = {1,3} is missing
  CHECK(!configs.empty());
  for (const WitnessConfig& c : configs) {
    CHECK(c.target == 2);
    CHECK(witness_config_valid(f, c));
  }
  // the known case-3 configuration is found
  WitnessConfig expected{WitnessConfig::Case::three, 2, set_of({1, 2, 4}, 4),
                         set_of({2}, 4), set_of({3}, 4), 0};
  CHECK(std::find(configs.begin(), configs.end(), expected) != configs.end());
}

TEST_CASE("reduce_case3") {
  Family f = chain_plus(4, {set_of({2}, 4), set_of({3}, 4), set_of({1, 2, 4}, 4)});
  WitnessConfig case3{WitnessConfig::Case::three, 2, set_of({1, 2, 4}, 4),
                      set_of({2}, 4), set_of({3}, 4), 0};
  REQUIRE(witness_config_valid(f, case3));

  // classify(a, b) is chain-between at j = i here, so both case-1 shapes emerge
  auto reduced = reduce_case3(f, case3);
  REQUIRE(reduced.size() == 2);
  for (const WitnessConfig& c : reduced) {
    CHECK(c.kind == WitnessConfig::Case::one);
    CHECK(c.b == set_of({3}, 4));
    CHECK(witness_config_valid(f, c));
  }
  CHECK(reduced[0].a != reduced[1].a);

  CHECK_THROWS_AS(reduce_case3(f, reduced[0]), std::invalid_argument);

  // sandwich-classified pair: the case-2 configuration always comes out;
  // the case-1 shapes for d are emitted only when their relations hold
  Family g = chain_plus(5, {set_of({3}, 5), set_of({1, 3, 4}, 5),
                            set_of({1, 2, 5}, 5)});
  WitnessConfig sandwich{WitnessConfig::Case::three, 1, set_of({1, 3, 4}, 5),
                         set_of({3}, 5), set_of({1, 2, 5}, 5), 0};
  REQUIRE(witness_config_valid(g, sandwich));
  PairClassification cls = classify_related_pair(g, sandwich.a, sandwich.b);
  REQUIRE(cls.kind == PairClassification::Kind::shackle_sandwich);
  CHECK(cls.j == 2);
  auto sandwich_reduced = reduce_case3(g, sandwich);
  REQUIRE(sandwich_reduced.size() == 1);  // d ⊋ C_1 blocks both case-1 shapes
  CHECK(sandwich_reduced[0].kind == WitnessConfig::Case::two);
  CHECK(sandwich_reduced[0].j == 2);
  CHECK(witness_config_valid(g, sandwich_reduced[0]));

  // every case-3 in the small catalogs reduces to a nonempty valid list
  for (int n : {3, 4}) {
    for (const Family& fam : enumerate_at(n, 2 * n).families) {
      for (int i = 1; i <= n - 1; ++i) {
        if (fam.contains(shackle_set(i, n))) continue;
        for (const WitnessConfig& c : witness_configs(fam, i)) {
          if (c.kind != WitnessConfig::Case::three) continue;
          auto r = reduce_case3(fam, c);
          CHECK(!r.empty());
          for (const WitnessConfig& rc : r) {
            CHECK(rc.kind != WitnessConfig::Case::three);
            CHECK(witness_config_valid(fam, rc));
          }
        }
      }
    }
  }
}

TEST_CASE("case-2 configurations satisfy the sandwich clause") {
  for (int n : {3, 4, 5}) {
    for (const Family& fam : enumerate_at(n, 2 * n).families) {
      for (int i = 1; i <= n - 1; ++i) {
        if (fam.contains(shackle_set(i, n))) continue;
        for (const WitnessConfig& c : witness_configs(fam, i)) {
          if (c.kind != WitnessConfig::Case::two) continue;
          CHECK((c.j == i - 1 || c.j == i + 1));
          SetWord sj = shackle_set(c.j, n);
          CHECK(subset_eq(c.b, sj));
          CHECK(subset_eq(sj, c.a));
        }
      }
    }
  }
}

TEST_CASE("witness_load") {
  // no missing shackles -> empty load everywhere
  Family f3 = chain_plus(3, {set_of({2}, 3), set_of({1, 3}, 3)});
  CHECK(witness_load(f3, set_of({2}, 3)).empty());
  CHECK(witness_load(f3, set_of({1, 3}, 3)).empty());

  Family f4 = chain_plus(4, {set_of({2}, 4), set_of({3}, 4), set_of({1, 2, 4}, 4)});
  CHECK(witness_load(f4, set_of({2}, 4)) == std::vector<int>{2});
  CHECK(witness_load(f4, set_of({3}, 4)) == std::vector<int>{2});
  CHECK(witness_load(f4, set_of({1, 2, 4}, 4)) == std::vector<int>{2});

  CHECK_THROWS_AS(witness_load(f4, set_of({1, 2}, 4)), std::invalid_argument);
  CHECK_THROWS_AS(witness_load(f4, set_of({4}, 4)), std::invalid_argument);
}

TEST_CASE("witness_load agrees with the 4-subset definition") {
  for (int n : {3, 4}) {
    for (const Family& fam : enumerate_at(n, 2 * n).families)
      for (SetWord x : fam.members()) {
        if (is_chain_set(x)) continue;
        CHECK(witness_load(fam, x) == oracle_load(fam, x));
      }
  }
}

TEST_CASE("witness loads respect the structural bounds on catalogs") {
  for (int n : {3, 4, 5}) {
    for (const Family& fam : enumerate_at(n, 2 * n).families) {
      for (SetWord x : fam.members()) {
        if (is_chain_set(x)) continue;
        auto load = witness_load(fam, x);
        int k = shackle_index(x, n);
        if (k != 0) {
          CHECK(load.size() <= 2);
          for (int i : load) CHECK((i == k - 1 || i == k + 1));
        } else {
          SpanInfo sp = span(x, n);
          CHECK(load.size() <= 4);
          std::set<int> allowed{sp.p,     sp.p + 1, sp.p + 2,
                                sp.q - 2, sp.q - 1, sp.q};
          for (int i : load) CHECK(allowed.count(i) == 1);
          // pair exclusivity, where the two pairs are disjoint
          if (sp.q - sp.p >= 5) {
            int low = 0, high = 0;
            for (int i : load) {
              if (i == sp.p + 1 || i == sp.p + 2) ++low;
              if (i == sp.q - 1 || i == sp.q - 2) ++high;
            }
            CHECK(low <= 1);
            CHECK(high <= 1);
          }
        }
      }
    }
  }
}

TEST_CASE("audit on reference families") {
  Family f5 = chain_plus(5, {set_of({2}, 5), set_of({3}, 5),
                             set_of({1, 2, 3, 5}, 5), set_of({1, 2, 4, 5}, 5)});
  AuditReport r = audit(f5);
  CHECK(r.all_ok());
  CHECK(r.saturated);
  CHECK(r.n == 5);
  CHECK(r.off_chain_count == 4);
  CHECK(r.inequality_holds);
  CHECK(r.size_bound_holds);

  // the whole lattice at n=2: one shackle, present, vacuous witness checks
  AuditReport r2 = audit(Family(2, {0, 1, 2, 3}));
  CHECK(r2.all_ok());
  CHECK(r2.shackle_count == 1);
  CHECK(r2.off_chain_count == 1);

  // non-saturated input is reported as a finding, not an exception
  AuditReport r3 = audit(canonical_chain(4));
  CHECK(!r3.all_ok());
  CHECK(!r3.saturated);
}

TEST_CASE("antichain scan") {
  // shackle-free catalog family with antichain off-chain part
  Family shackle_free = chain_plus(
      5, {set_of({3}, 5), set_of({1, 4}, 5), set_of({1, 2, 5}, 5),
          set_of({2, 4, 5}, 5)});
  // family containing a shackle is skipped
  Family with_shackle = chain_plus(4, {set_of({2}, 4), set_of({3}, 4),
                                       set_of({1, 4}, 4)});
  AntichainScanReport report = antichain_scan({shackle_free, with_shackle});
  CHECK(report.checked == 1);
  CHECK(report.skipped == 1);
  CHECK(report.counterexamples == 0);
  CHECK(report.entries[0].shackle_free);
  CHECK(report.entries[0].antichain);
  CHECK(!report.entries[1].shackle_free);

  // a manufactured comparable pair is caught
  Family broken = chain_plus(5, {set_of({3}, 5), set_of({3, 5}, 5)});
  AntichainScanReport bad = antichain_scan({broken});
  CHECK(bad.counterexamples == 1);
  REQUIRE(bad.entries[0].comparable_pair.has_value());
  CHECK(bad.entries[0].comparable_pair->first == set_of({3}, 5));
  CHECK(bad.entries[0].comparable_pair->second == set_of({3, 5}, 5));

  // across the n=4 and n=5 catalogs: zero counterexamples
  for (int n : {4, 5}) {
    AntichainScanReport cat = antichain_scan(enumerate_at(n, 2 * n).families);
    CHECK(cat.counterexamples == 0);
  }
}
