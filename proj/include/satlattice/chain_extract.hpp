#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "satlattice/core.hpp"

namespace satlattice {

/// Two members whose open downsets are not nested either way.
class TrichotomyViolation : public std::runtime_error {
 public:
  TrichotomyViolation(SetWord first, SetWord second);
  SetWord first() const { return first_; }
  SetWord second() const { return second_; }

 private:
  SetWord first_, second_;
};

/// Chain extraction hit a gap interval [gap_low, gap_high) with a set
/// missing from the family, or the family lacks the lattice endpoints.
class ExtractionError : public std::runtime_error {
 public:
  ExtractionError(std::string message, SetWord gap_low, SetWord gap_high,
                  std::optional<SetWord> missing);
  SetWord gap_low() const { return gap_low_; }
  SetWord gap_high() const { return gap_high_; }
  std::optional<SetWord> missing() const { return missing_; }

 private:
  SetWord gap_low_, gap_high_;
  std::optional<SetWord> missing_;
};

/// Open downset: members of f strictly contained in s.
Family downset(const Family& f, SetWord s);

struct TrichotomyResult {
  bool holds = false;
  SetWord first = 0, second = 0;  // counterexample pair when !holds
};

/// For every pair of members, their open downsets must be nested or equal.
/// Guaranteed to hold when f is induced-2C2-free.
TrichotomyResult downset_trichotomy(const Family& f);

/// Members ordered by weakly decreasing open downset, from the full set end
/// down; equal downsets are broken by increasing word value. Throws
/// TrichotomyViolation when no such order exists.
std::vector<SetWord> linear_extension_of_downset_preorder(const Family& f);

struct ExtractionTrace {
  std::vector<SetWord> order;  // linear extension, top-down
  std::vector<SetWord> g_seq;  // running intersections of the order prefix
  Family chain;
};

struct ChainExtraction {
  Family chain;  // n+1 sets, consecutive covers, endpoints ∅ and [n]
  ExtractionTrace trace;
};

/// Pulls a maximal chain contained in f out of the downset order; every
/// saturated family admits one. With verify set, saturation is re-checked
/// up front and rejected inputs raise ExtractionError before any work.
ChainExtraction extract_maximal_chain(const Family& f, bool verify = false);

}  // namespace satlattice
