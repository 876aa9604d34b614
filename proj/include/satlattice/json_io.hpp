#pragma once

#include <json.hpp>

#include "satlattice/chain_extract.hpp"
#include "satlattice/constructions.hpp"
#include "satlattice/core.hpp"
#include "satlattice/freeness.hpp"
#include "satlattice/search.hpp"
#include "satlattice/witness.hpp"

namespace satlattice {

// A set serializes to its sorted element array; a family to
// {"n": <ground size>, "sets": [[...], ...]}.

nlohmann::json set_to_json(SetWord s);
nlohmann::json family_to_json(const Family& f);
Family family_from_json(const nlohmann::json& j);

nlohmann::json copy_to_json(const InducedCopy& c);  // four sets, a a' b b'
nlohmann::json trace_to_json(const ExtractionTrace& t);
nlohmann::json catalog_to_json(const Catalog& c);
nlohmann::json audit_to_json(const AuditReport& r);
nlohmann::json antichain_report_to_json(const AntichainScanReport& r);
nlohmann::json certificate_to_json(const ConstructionCertificate& c);

}  // namespace satlattice
