#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "satlattice/core.hpp"
#include "satlattice/freeness.hpp"

namespace satlattice {

struct ConstructionSpec {
  enum class Kind { singletons, f_star };
  Kind kind = Kind::singletons;
  int n = 0;
  int i = 0;  // f_star only, 2 <= i <= n-1
};

/// Canonical chain plus the singletons {2},...,{n}; 2n members.
Family build_singletons(int n);

/// Canonical chain plus {2},...,{i} and the complements of {i},...,{n-1};
/// 2n members. Dual to the same construction at index n+1-i.
Family build_f_star(int n, int i);

struct ConstructionCertificate {
  Family family;
  bool free = false;
  bool saturated = false;
  std::optional<InducedCopy> internal_copy;
  std::optional<SetWord> unwitnessed_outsider;
  // On success: one witnessing quadruple per outsider, outsiders ascending.
  std::vector<std::pair<SetWord, InducedCopy>> outsider_witnesses;
};

/// Builds the requested family and establishes saturation with the generic
/// checker, collecting a witness quadruple for every outsider.
ConstructionCertificate verify_construction(const ConstructionSpec& spec);

}  // namespace satlattice
