#pragma once

// JSON faces of the domain types. nlohmann::json keeps object keys sorted,
// which is what makes every emitted document byte-reproducible.

#include "mukai/destab.hpp"
#include "mukai/intersect.hpp"
#include "mukai/nslattice.hpp"
#include "mukai/vectors.hpp"
#include "mukai/walls.hpp"

#include <json.hpp>

#include <memory>

namespace mukai {

using json = nlohmann::json;

json rational_json(const Rational& q); // "p/q" string

json mukai_vector_json(const MukaiVector& v);

json charge_json(const ChargeValue& z);

json wall_json(const Wall& wall);

json candidate_json(const WallCandidate& c);
json candidates_json(const std::vector<WallCandidate>& cs);

json case_report_json(const CaseReport& rep);

json simultaneity_json(long long s, const SimultaneityReport& rep);

json oxwall_json(long long s, const OxWallOptions& opts,
                 const std::vector<OxWallSolution>& sols);

json search_result_json(long long target_sq, long long target_hdeg,
                        const ClassSearchResult& res);
json noellint1_json(const Noellint1Report& rep);
json hyperelliptic_json(const HyperellipticDiagnostics& d);

json h0_bound_json(const H0Bound& bound, long long h0max, H0BoundVersion version);

// {"rank": n, "gram": [[...]], "h": [...]}
std::shared_ptr<const GramLattice> lattice_from_json(const json& j);

// {"basis": ["L", ...], "products": [{"i": "L", "j": "L", "k": "L", "v": 1}, ...]}
TripleTable table_from_json(const json& j);

std::string verdict_str(VerdictKind v);

} // namespace mukai
