#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "satlattice/core.hpp"

namespace satlattice {

/// Position of an off-chain set against the canonical chain:
/// p is the greatest index with C_p ⊊ F, q the least with F ⊊ C_q.
/// A shackle has q = p + 2; any other off-chain set has q >= p + 3.
struct SpanInfo {
  int p = 0, q = 0;
};
SpanInfo span(SetWord member, int n);

/// How a nested off-chain pair b ⊊ a meets the canonical chain. Exactly one
/// of two shapes occurs in a saturated family: some C_j lies strictly
/// between them, or a unique shackle S_j is sandwiched b ⊆ S_j ⊆ a with C_j
/// incomparable to both. Any other gap between j_a and j_b certifies an
/// induced 2C2 and is reported as a contradiction, not thrown.
struct PairClassification {
  enum class Kind { chain_between, shackle_sandwich, contradiction };
  Kind kind = Kind::contradiction;
  int j = 0;    // chain index between (= j_b), or the sandwich shackle index
  int j_a = 0;  // greatest index with C_{j_a} ⊊ a
  int j_b = 0;  // least index with C_{j_b} ⊋ b
  std::string detail;
};
PairClassification classify_related_pair(const Family& f, SetWord a, SetWord b);

/// One way a missing shackle S_i is witnessed.
///   Case 1: {a, C_i} ∥ {b, S_i} with a ~ C_i and b ~ S_i.
///   Case 2: b ⊊ a and {a, b} ∥ {C_j, S_i} for a j != i; then j ∈ {i-1, i+1}
///           and b ⊆ S_j ⊆ a.
///   Case 3: b ⊊ a, d ~ S_i, {a, b} ∥ {d, S_i}, no chain set involved.
struct WitnessConfig {
  enum class Case { one = 1, two = 2, three = 3 };
  Case kind = Case::one;
  int target = 0;  // the missing shackle index i
  SetWord a = 0, b = 0;
  SetWord d = 0;  // case 3 only
  int j = 0;      // case 2 only
  bool operator==(const WitnessConfig&) const = default;
};

/// A missing shackle with no witness configuration at all: the family
/// cannot be saturated.
class NotSaturatedError : public std::runtime_error {
 public:
  explicit NotSaturatedError(const std::string& what) : std::runtime_error(what) {}
};

/// All case-1/2/3 configurations realized inside f ∪ {S_i}. Requires S_i
/// off the family and the canonical chain inside it; throws
/// NotSaturatedError when no configuration exists.
std::vector<WitnessConfig> witness_configs(const Family& f, int i);

/// Checks the defining relations of a configuration against f's ground set.
bool witness_config_valid(const Family& f, const WitnessConfig& cfg);

/// Re-derives case-1/2 configurations covering the participants of a valid
/// case-3 configuration, splitting on classify_related_pair(a, b).
std::vector<WitnessConfig> reduce_case3(const Family& f, const WitnessConfig& cfg);

/// Missing shackle indices i such that some induced 2C2 inside f ∪ {S_i}
/// uses both x and S_i. x must be an off-chain member.
std::vector<int> witness_load(const Family& f, SetWord x);

struct ShackleAudit {
  int index = 0;
  bool present = false;
  std::vector<SetWord> witnesses;  // off-chain witnesses when missing
  int case1 = 0, case2 = 0, case3 = 0;
  std::vector<WitnessConfig> configs;
};

struct MemberAudit {
  SetWord member = 0;
  bool is_shackle = false;
  SpanInfo span;
  std::vector<int> load;
  bool load_bound_ok = false;     // ≤2 for shackles, ≤4 otherwise
  bool candidate_set_ok = false;  // load inside the span candidate set
  bool pair_rule_ok = false;      // ≤1 of {p+1,p+2} and ≤1 of {q-2,q-1}
};

struct AuditReport {
  int n = 0;
  bool chain_present = false;
  bool saturated = false;
  int shackle_count = 0;     // s: shackles among the members
  int off_chain_count = 0;   // k: members off the canonical chain
  std::vector<ShackleAudit> shackles;
  std::vector<MemberAudit> members;
  bool witnesses_ok = false;   // every missing shackle has ≥2 off-chain witnesses
  bool inequality_holds = false;  // n-1 ≤ 2k
  bool size_bound_holds = false;  // |f| ≥ 3n/2 + 1/2
  std::vector<std::string> findings;
  bool all_ok() const { return findings.empty(); }
};

/// Full structural audit of a saturated family containing the canonical
/// chain. Violations are reported as findings, not exceptions.
AuditReport audit(const Family& f);

struct AntichainScanEntry {
  Family family;
  bool shackle_free = false;
  bool antichain = false;                            // when shackle_free
  std::optional<std::pair<SetWord, SetWord>> comparable_pair;
};

struct AntichainScanReport {
  int n = 0;
  int checked = 0;  // shackle-free families examined
  int skipped = 0;
  std::vector<AntichainScanEntry> entries;
  int counterexamples = 0;
};

/// For families whose off-chain part has no shackle, checks that the
/// off-chain part is an antichain.
AntichainScanReport antichain_scan(const std::vector<Family>& families);

}  // namespace satlattice
