#include "satlattice/constructions.hpp"

#include <stdexcept>
#include <string>

namespace satlattice {

Family build_singletons(int n) {
  require_ground_size(n);
  if (n < 2) throw std::invalid_argument("singletons construction needs n >= 2");
  std::vector<SetWord> m = canonical_chain(n).members();
  for (int e = 2; e <= n; ++e) m.push_back(singleton(e));
  return Family(n, std::move(m));
}

Family build_f_star(int n, int i) {
  require_ground_size(n);
  if (i < 2 || i > n - 1)
    throw std::invalid_argument("f_star index must be in [2, " +
                                std::to_string(n - 1) + "], got " + std::to_string(i));
  std::vector<SetWord> m = canonical_chain(n).members();
  for (int e = 2; e <= i; ++e) m.push_back(singleton(e));
  for (int e = i; e <= n - 1; ++e) m.push_back(full_set(n) & ~singleton(e));
  return Family(n, std::move(m));
}

ConstructionCertificate verify_construction(const ConstructionSpec& spec) {
  ConstructionCertificate cert;
  switch (spec.kind) {
    case ConstructionSpec::Kind::singletons:
      cert.family = build_singletons(spec.n);
      break;
    case ConstructionSpec::Kind::f_star:
      cert.family = build_f_star(spec.n, spec.i);
      break;
  }

  RelationIndex index(cert.family);
  cert.internal_copy = index.any_copy();
  cert.free = !cert.internal_copy.has_value();
  if (!cert.free) return cert;

  SetWord top = full_set(cert.family.ground_size());
  for (SetWord s = 0; s <= top; ++s) {
    if (cert.family.contains(s)) continue;
    auto copy = index.copy_with(s);
    if (!copy.has_value()) {
      cert.unwitnessed_outsider = s;
      return cert;
    }
    cert.outsider_witnesses.emplace_back(s, *copy);
  }
  cert.saturated = true;
  return cert;
}

}  // namespace satlattice
