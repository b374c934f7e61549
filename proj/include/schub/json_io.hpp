#pragma once

#include <string>

#include <json.hpp>

#include "schub/diagonal.hpp"
#include "schub/flagbundle.hpp"
#include "schub/rootsys.hpp"
#include "schub/schubert.hpp"
#include "schub/torsion.hpp"

namespace schub {

// Deterministic JSON: insertion-ordered objects, canonical rationals
// (den > 0, gcd(num, den) = 1 — mpq_class keeps them canonical).
using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "schubcalc 0.1.0";

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json weyl_element_to_json(const WeylElement& w);
Json root_system_to_json(const RootSystem& rs);

Json weyl_group_to_json(const WeylGroup& W);

Json class_expansion_to_json(const ClassExpansion& ce);
Json verification_report_to_json(const VerificationReport& rep);
Json torsion_report_to_json(const TorsionReport& rep, bool full);

// Convention block included in certificates: realization vectors, the G2
// bridge, and the sign policy.
Json convention_block(const RootSystem& rs);

// Weyl enumeration cache. Loads are validated against the expected group
// order and length statistics; corrupt or missing files trigger a recompute
// (and an overwrite on save).
void save_weyl_cache(const std::string& path, const WeylGroup& W);
std::optional<std::vector<WeylElement>> load_weyl_cache(const std::string& path,
                                                        const RootSystem& rs);
bool load_weyl_cache_valid(const std::string& path, const RootSystem& rs);

}  // namespace schub
