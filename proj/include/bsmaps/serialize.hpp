#pragma once

#include <json.hpp>

#include "bsmaps/attractor.hpp"
#include "bsmaps/boundary_maps.hpp"
#include "bsmaps/coding.hpp"
#include "bsmaps/duality.hpp"
#include "bsmaps/markov.hpp"
#include "bsmaps/surface.hpp"

namespace bsmaps {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceGroup& s);
/// Inverse of to_json(SurfaceGroup); validated by the group relations.
SurfaceGroup surface_from_json(const Json& j, double tol = kEpsilon);

Json to_json(const RelationReport& r);
Json to_json(const GeometryReport& r);

Json to_json(const SurfaceGroup& s, const SolvedPoint& p);
Json solution_json(const SurfaceGroup& s, const ExtremalParams& params, const SolvedParams& solved);
Json dual_json(const SurfaceGroup& s, const DualParams& dual, const DualDomain& domain);

Json to_json(const LabeledRect& r);
Json to_json(const RectDomain& d);

Json to_json(const BijectivityReport& r);
Json to_json(const ConjugacyReport& r);
Json to_json(const DualityReport& r);
Json to_json(const FamilyReport& r);
Json to_json(const CodingSeq& c);
Json to_json(const AttractorReport& r);

/// {"size", "rows": [[j, ...], ...], "row_counts"} with 1-based columns.
Json to_json(const TransitionMatrix& m);
/// One line per row of 0/1 characters.
std::string to_text(const TransitionMatrix& m);
/// {"letters", "state_labels", "edges": [{from, to, from_state, to_state}]}.
Json to_json(const SoficGraph& g);

}  // namespace bsmaps
