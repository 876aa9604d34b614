#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "satlattice/core.hpp"

namespace satlattice {

struct SearchConfig {
  bool fix_chain = true;
  int thread_count = 1;
  /// Acknowledges the cost of leaving the supported range (n > 6, or any
  /// unfixed-chain run beyond a few million candidate families).
  bool allow_large = false;
  /// Shard-completion callback: (shards done, shards total).
  std::function<void(std::size_t, std::size_t)> progress;
  /// Called on every free candidate family the search visits, including
  /// internal nodes. Forces a single-threaded, deterministic traversal.
  std::function<void(const Family&)> free_observer;
};

struct DualityClass {
  Family representative;
  Family partner;  // equals representative for self-dual families
  bool self_dual = false;
};

struct Catalog {
  int n = 0;
  int size = 0;
  std::vector<Family> families;       // canonically sorted
  std::vector<DualityClass> classes;  // filled by group_by_duality
};

class FeasibilityError : public std::invalid_argument {
 public:
  explicit FeasibilityError(const std::string& what) : std::invalid_argument(what) {}
};

class CatalogIntegrityError : public std::runtime_error {
 public:
  explicit CatalogIntegrityError(const std::string& what)
      : std::runtime_error(what) {}
};

/// All saturated families of exactly `size` members that contain the
/// canonical chain (or arbitrary families when fix_chain is off), found by
/// depth-first search over off-chain candidates with incremental freeness
/// pruning. Every emitted family is re-verified with the unpruned checker,
/// and the catalog is grouped by duality.
Catalog enumerate_at(int n, int size, const SearchConfig& config = {});

/// Smallest m >= n+2 admitting a saturated family of m members containing
/// the canonical chain, plus the full catalog at that size.
std::pair<int, Catalog> search_min(int n, const SearchConfig& config = {});

/// Pairs every family with its dual; throws CatalogIntegrityError if the
/// catalog is not closed under duality.
void group_by_duality(Catalog& catalog);

struct CatalogDiff {
  std::vector<Family> only_in_golden;
  std::vector<Family> only_in_catalog;
  bool empty() const { return only_in_golden.empty() && only_in_catalog.empty(); }
};

CatalogDiff catalog_diff(const Catalog& catalog, const std::vector<Family>& golden);

class FixtureError : public std::runtime_error {
 public:
  FixtureError(const std::string& what, int line)
      : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Fixture format: one family per line in shorthand, '#' comments allowed.
/// Lines list off-chain members only; the canonical chain is implied when
/// with_chain is set.
std::vector<Family> load_fixture_families(const std::string& path, int n,
                                          bool with_chain = true);

}  // namespace satlattice
