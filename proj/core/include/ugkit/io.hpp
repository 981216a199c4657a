#pragma once

#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "ugkit/branching.hpp"
#include "ugkit/discrete.hpp"
#include "ugkit/g0.hpp"
#include "ugkit/ideals.hpp"
#include "ugkit/paths.hpp"
#include "ugkit/permutative.hpp"
#include "ugkit/representation.hpp"
#include "ugkit/step_function.hpp"
#include "ugkit/ultragraph.hpp"

namespace ugkit::io {

using nlohmann::json;

enum class DocumentKind { Graph, Interval, Discrete };

DocumentKind document_kind(const json& doc);

Ultragraph graph_from_json(const json& doc);
json to_json(const Ultragraph& g);

VertexSet vertex_set_from_json(const Ultragraph& g, const json& doc);
json to_json(const Ultragraph& g, const VertexSet& a);
json to_json(const Ultragraph& g, const std::set<VertexId>& a);

/// "v1,v2" with an optional "+tail:N" suffix; the empty string is ∅.
VertexSet parse_vertex_list(const Ultragraph& g, const std::string& text);
/// Comma-separated edge ids.
Path parse_edge_list(const std::string& text);
std::set<std::uint64_t> parse_int_list(const std::string& text);

json to_json(const Interval& iv);
Interval interval_from_json(const json& doc);
json to_json(const IntervalSet& s);
IntervalSet interval_set_from_json(const json& doc);

IntervalBranchingSystem interval_bs_from_json(const json& doc);
json to_json(const IntervalBranchingSystem& bs);
DiscreteBranchingSystem discrete_bs_from_json(const json& doc);
json to_json(const DiscreteBranchingSystem& bs);

StepFunction step_function_from_json(const json& doc);
json to_json(const StepFunction& phi);
json to_json(const PiecewiseAffineMap& m);

json to_json(const Ultragraph& g, const G0Decision& d);
json to_json(const Path& p);
json to_json(const Ultragraph& g, const Exit& x);
json to_json(const Ultragraph& g, const ConditionL& c);
json to_json(const Digraph& d);
json to_json(const Ultragraph& g, const HSCheck& c);
json to_json(const Ultragraph& g, const EssentialResult& r);
json to_json(const Ultragraph& g, const UniquenessDecomposition& d);
json to_json(const Ultragraph& g, const UniquenessReport& r);
json to_json(const BsReport& r);
json to_json(const CkReport& r);
json to_json(const Ultragraph& g, const Extreme& x);
json to_json(const Ultragraph& g, const PeelTrace& t);
json to_json(const PermutativityResult& r);
json to_json(const L1Report& r);
json to_json(const FaithfulnessResult& r);

}  // namespace ugkit::io
