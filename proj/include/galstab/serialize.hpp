#pragma once

#include <json.hpp>

#include "galstab/constructions.hpp"
#include "galstab/group.hpp"
#include "galstab/ideal.hpp"
#include "galstab/structure.hpp"

// JSON forms.  Bignums are decimal strings; nlohmann's default object keeps keys sorted.
namespace galstab {

using Json = nlohmann::json;

Json to_json(const CycElement& x);
/// Throws Parse on malformed input.
CycElement element_from_json(const Json& j);

Json to_json(const CycMatrix& a);
CycMatrix matrix_from_json(const Json& j, const CyclotomicField& field);

Json to_json(const IntMatrix& a);
Json to_json(const Level& level);
Json to_json(const SubfieldHandle& k);
Json to_json(const PrimeIdeal& beta);

/// {"n", "m", "order", "elements", "generators"}.
Json to_json(const FiniteMatrixGroup& g);
/// Recloses the generators when present and checks them against the element list.
FiniteMatrixGroup group_from_json(const Json& j, std::size_t cap = kDefaultGroupCap);

Json to_json(const ATypeCertificate& cert);
Json to_json(const DiagonalizationResult& r);
Json to_json(const EmbeddingMatrix& e);
Json to_json(const PUReport& r);
Json to_json(const WitnessAudit& w);
Json to_json(const TorsionAuditReport& r);
Json to_json(const Corollary1Report& r);

}  // namespace galstab
