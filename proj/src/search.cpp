#include "satlattice/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>

#include "satlattice/freeness.hpp"
#include "satlattice/text.hpp"

namespace satlattice {

namespace {

// Incremental search state over at most 64 members. Relations are kept as
// one word of member indices each, so the freeness test for a new set is a
// handful of word operations per existing member.
class SearchKernel {
 public:
  explicit SearchKernel(int n) : n_(n), present_(std::size_t{1} << n, 0) {}

  std::size_t size() const { return members_.size(); }

  void push(SetWord s) {
    std::size_t m = members_.size();
    std::uint64_t comp = 0;
    std::uint64_t sup = 0;
    for (std::size_t t = 0; t < m; ++t) {
      if (subset_eq(members_[t], s)) {
        comp |= std::uint64_t{1} << t;
        sup_[t] |= std::uint64_t{1} << m;
        comp_[t] |= std::uint64_t{1} << m;
      } else if (subset_eq(s, members_[t])) {
        comp |= std::uint64_t{1} << t;
        sup |= std::uint64_t{1} << t;
        comp_[t] |= std::uint64_t{1} << m;
      }
    }
    members_.push_back(s);
    comp_.push_back(comp);
    sup_.push_back(sup);
    present_[s] = 1;
  }

  void pop() {
    SetWord s = members_.back();
    present_[s] = 0;
    std::size_t m = members_.size() - 1;
    members_.pop_back();
    comp_.pop_back();
    sup_.pop_back();
    std::uint64_t clear = ~(std::uint64_t{1} << m);
    for (std::size_t t = 0; t < m; ++t) {
      comp_[t] &= clear;
      sup_[t] &= clear;
    }
  }

  bool contains(SetWord s) const { return present_[s] != 0; }

  /// Would members ∪ {x} contain an induced 2C2 using x?
  bool creates_copy(SetWord x) const {
    std::size_t m = members_.size();
    std::uint64_t compx = 0;
    for (std::size_t t = 0; t < m; ++t)
      if (related(x, members_[t])) compx |= std::uint64_t{1} << t;
    std::uint64_t rest = compx;
    while (rest != 0) {
      std::size_t t = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      std::uint64_t bad = ~compx & ~comp_[t] & valid_mask();
      std::uint64_t scan = bad;
      while (scan != 0) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(scan));
        scan &= scan - 1;
        if ((sup_[u] & bad) != 0) return true;
      }
    }
    return false;
  }

  /// Every set outside the current members must be witnessed.
  bool saturated_now() const {
    SetWord top = full_set(n_);
    for (SetWord s = 0; s <= top; ++s) {
      if (present_[s]) continue;
      if (!creates_copy(s)) return false;
    }
    return true;
  }

  const std::vector<SetWord>& members() const { return members_; }

 private:
  std::uint64_t valid_mask() const {
    std::size_t m = members_.size();
    return m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  }

  int n_;
  std::vector<SetWord> members_;
  std::vector<std::uint64_t> comp_;  // indices related to member (self excluded)
  std::vector<std::uint64_t> sup_;   // indices of strict supersets
  std::vector<std::uint8_t> present_;
};

std::vector<SetWord> off_chain_candidates(int n) {
  std::vector<SetWord> out;
  for (SetWord s = 1; s < full_set(n); ++s)
    if (!is_chain_set(s)) out.push_back(s);
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r = r * double(n - i) / double(i + 1);
  return r;
}

void check_feasibility(int n, int size, const SearchConfig& config) {
  require_ground_size(n);
  if (size < n + 1 || size > (1 << n))
    throw std::invalid_argument("target size must lie in [n+1, 2^n]");
  if (size > 64)
    throw FeasibilityError("the search state is limited to 64 members");
  if (config.allow_large) return;
  std::size_t candidates = (std::size_t{1} << n) - std::size_t(n) - 1;
  std::size_t depth = std::size_t(size) - std::size_t(n) - 1;
  double cost = binomial(candidates, depth);
  if (n > 6 || cost > 2.0e8)
    throw FeasibilityError(
        "search at n=" + std::to_string(n) + ", size=" + std::to_string(size) +
        " visits up to " + std::to_string(static_cast<unsigned long long>(cost)) +
        " candidate families; pass allow_large to run it anyway");
}

// Depth-first extension of the kernel by candidates[from..), keeping the
// family free; saturation is only decided at full target size.
void dfs(int n, SearchKernel& kernel, const std::vector<SetWord>& candidates,
         std::size_t from, std::size_t remaining, const SearchConfig& config,
         std::vector<std::vector<SetWord>>& found) {
  if (remaining == 0) {
    if (kernel.saturated_now()) found.push_back(kernel.members());
    return;
  }
  for (std::size_t c = from; c + remaining <= candidates.size(); ++c) {
    if (kernel.creates_copy(candidates[c])) continue;
    kernel.push(candidates[c]);
    if (config.free_observer) config.free_observer(Family(n, kernel.members()));
    dfs(n, kernel, candidates, c + 1, remaining - 1, config, found);
    kernel.pop();
  }
}

Catalog finish_catalog(int n, int size, std::vector<std::vector<SetWord>> raw) {
  Catalog catalog;
  catalog.n = n;
  catalog.size = size;
  catalog.families.reserve(raw.size());
  for (auto& members : raw) catalog.families.emplace_back(n, std::move(members));
  std::sort(catalog.families.begin(), catalog.families.end());
  catalog.families.erase(
      std::unique(catalog.families.begin(), catalog.families.end()),
      catalog.families.end());
  // Post-search re-verification with the unpruned checker.
  for (const Family& f : catalog.families) {
    if (!is_saturated(f))
      throw CatalogIntegrityError("search emitted a non-saturated family: " +
                                  render_family(f));
    if (!f.contains(0) || !f.contains(full_set(n)))
      throw CatalogIntegrityError("saturated family misses a lattice endpoint: " +
                                  render_family(f));
  }
  group_by_duality(catalog);
  return catalog;
}

}  // namespace

Catalog enumerate_at(int n, int size, const SearchConfig& config) {
  check_feasibility(n, size, config);
  if (!config.fix_chain) {
    // Unfixed-chain runs enumerate every size-subset of the lattice; only
    // sensible at toy scale, guarded by the same feasibility estimate.
    double cost = binomial(std::size_t{1} << n, std::size_t(size));
    if (!config.allow_large && cost > 2.0e7)
      throw FeasibilityError("unfixed-chain search is infeasible at n=" +
                             std::to_string(n));
    std::vector<SetWord> all;
    for (SetWord s = 0; s <= full_set(n); ++s) all.push_back(s);
    SearchKernel kernel(n);
    std::vector<std::vector<SetWord>> found;
    dfs(n, kernel, all, 0, std::size_t(size), config, found);
    return finish_catalog(n, size, std::move(found));
  }

  std::vector<SetWord> chain = canonical_chain(n).members();
  std::vector<SetWord> candidates = off_chain_candidates(n);
  std::size_t depth = std::size_t(size) - chain.size();
  if (depth > candidates.size()) return finish_catalog(n, size, {});

  std::size_t shard_count = depth == 0 ? 1 : candidates.size() - depth + 1;
  int threads = std::max(1, config.thread_count);
  if (config.free_observer) threads = 1;

  std::vector<std::vector<SetWord>> found;
  std::mutex sink;
  std::atomic<std::size_t> next_shard{0};
  std::atomic<std::size_t> done_shards{0};

  auto worker = [&]() {
    SearchKernel kernel(n);
    for (SetWord s : chain) kernel.push(s);
    std::vector<std::vector<SetWord>> local;
    while (true) {
      std::size_t shard = next_shard.fetch_add(1);
      if (shard >= shard_count) break;
      if (depth == 0) {
        if (kernel.saturated_now()) local.push_back(kernel.members());
      } else if (candidates.size() - shard >= depth &&
                 !kernel.creates_copy(candidates[shard])) {
        kernel.push(candidates[shard]);
        if (config.free_observer) config.free_observer(Family(n, kernel.members()));
        dfs(n, kernel, candidates, shard + 1, depth - 1, config, local);
        kernel.pop();
      }
      std::size_t done = done_shards.fetch_add(1) + 1;
      if (config.progress) {
        std::lock_guard<std::mutex> lock(sink);
        config.progress(done, shard_count);
      }
    }
    if (!local.empty()) {
      std::lock_guard<std::mutex> lock(sink);
      for (auto& v : local) found.push_back(std::move(v));
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return finish_catalog(n, size, std::move(found));
}

std::pair<int, Catalog> search_min(int n, const SearchConfig& config) {
  require_ground_size(n);
  if (n < 2) throw std::invalid_argument("search needs n >= 2");
  for (int size = n + 2; size <= 2 * n; ++size) {
    Catalog catalog = enumerate_at(n, size, config);
    if (!catalog.families.empty()) return {size, std::move(catalog)};
  }
  throw CatalogIntegrityError(
      "no saturated family of size at most 2n found; the search is broken");
}

void group_by_duality(Catalog& catalog) {
  catalog.classes.clear();
  std::set<Family> pool(catalog.families.begin(), catalog.families.end());
  for (const Family& f : catalog.families) {
    Family d = dual(f);
    if (pool.find(d) == pool.end())
      throw CatalogIntegrityError("catalog is not closed under duality: dual of " +
                                  render_family(f) + " is absent");
    if (d < f) continue;  // emitted when visiting the representative
    DualityClass cls;
    cls.self_dual = d == f;
    cls.representative = f;
    cls.partner = std::move(d);
    catalog.classes.push_back(std::move(cls));
  }
}

CatalogDiff catalog_diff(const Catalog& catalog, const std::vector<Family>& golden) {
  std::vector<Family> sorted_golden = golden;
  std::sort(sorted_golden.begin(), sorted_golden.end());
  sorted_golden.erase(std::unique(sorted_golden.begin(), sorted_golden.end()),
                      sorted_golden.end());
  CatalogDiff diff;
  std::set_difference(sorted_golden.begin(), sorted_golden.end(),
                      catalog.families.begin(), catalog.families.end(),
                      std::back_inserter(diff.only_in_golden));
  std::set_difference(catalog.families.begin(), catalog.families.end(),
                      sorted_golden.begin(), sorted_golden.end(),
                      std::back_inserter(diff.only_in_catalog));
  return diff;
}

std::vector<Family> load_fixture_families(const std::string& path, int n,
                                          bool with_chain) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open fixture file: " + path, 0);
  std::vector<Family> out;
  std::string line;
  int lineno = 0;
  const Family chain_family = canonical_chain(n);
  const std::vector<SetWord>& chain = chain_family.members();
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    std::size_t last = line.find_last_not_of(" \t\r");
    try {
      Family f = parse_family(line.substr(first, last - first + 1), n);
      if (with_chain) {
        std::vector<SetWord> m = f.members();
        m.insert(m.end(), chain.begin(), chain.end());
        f = Family(n, std::move(m));
      }
      out.push_back(std::move(f));
    } catch (const ParseError& e) {
      throw FixtureError(path + ":" + std::to_string(lineno) + ": " + e.what(),
                         lineno);
    }
  }
  return out;
}

}  // namespace satlattice
