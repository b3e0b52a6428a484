#ifndef RCCMERGE_IO_HPP
#define RCCMERGE_IO_HPP

#include "rccmerge/classify.hpp"
#include "rccmerge/merge.hpp"
#include "rccmerge/select.hpp"
#include "rccmerge/translate.hpp"

#include <json.hpp>

namespace rccmerge {

using Json = nlohmann::json;

Json to_json(const Ontology& o);
Json to_json(const ClosedABox& c);
Json to_json(const Classification& c);
/// {"variables": [...], "constraints": [{"from", "to", "rel"}]}; one entry
/// per non-full canonical pair, plus from == to entries for empty variables.
Json to_json(const Qcn& n);
Json to_json(const ForwardTranslation& t);
Json to_json(const MergeTrace& t);
Json to_json(const DistanceTable& t);
Json to_json(const ScenarioScore& s);
/// Candidates with their scores and the selection.
Json scenarios_to_json(const std::vector<Scenario>& candidates, const Selection& selection);

/// Inverse of to_json(const Qcn&). Throws InputError on malformed input.
Qcn qcn_from_json(const Json& j);

/// Graphviz digraph, one edge per non-full canonical pair.
std::string to_dot(const Qcn& n, const std::string& graph_name = "qcn");

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace rccmerge

#endif  // RCCMERGE_IO_HPP
