// JSON encodings of the toolkit's records and DOT export. All vertex labels
// in these encodings are 1-based.

#ifndef TOURN_IO_HPP
#define TOURN_IO_HPP

#include "tourn/embedding.hpp"
#include "tourn/regularity.hpp"
#include "tourn/structure.hpp"
#include "tourn/tournament.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tourn {

using Json = nlohmann::ordered_json;

Json vertex_list_json(const std::vector<int>& vertices);
/// Throws std::invalid_argument for non-integers, labels outside 1..n or
/// repeated labels.
std::vector<int> vertex_list_from_json(const Json& j, int n);

Json to_json(const VertexSet& s);
VertexSet vertex_set_from_json(const Json& j, int n);

/// Vertices in position order.
Json to_json(const Ordering& o);
Ordering ordering_from_json(const Json& j, int n);

/// {w, c, lambda, sets}
Json to_json(const ChainStructure& chain);
ChainStructure chain_from_json(const Json& j, int n);

/// {transitive_part, bulk, direction, bulk_witness, bulk_witness_exact, claimed_gain}
Json to_json(const MergeCertificate& cert);
MergeCertificate merge_from_json(const Json& j, int n);

/// {pattern, outcome, vertices | sets, ordering_name, trace, trace_detail}
Json to_json(const ReplayOutcome& outcome, Pattern pattern);
ReplayOutcome replay_from_json(const Json& j, int n, Pattern* pattern = nullptr);

/// {n, bits, outcomes, witnesses}; witnesses refer to the canonical
/// representative's vertices.
Json to_json(const ClassificationRecord& r);
ClassificationRecord classification_from_json(const Json& j);

Json to_json(const StarDecomposition& d);

Json to_json(const MatchingOutcome& m);

/// DOT digraph. With an ordering, nodes carry `position` and are chained left
/// to right; backward arcs carry `backward=true`.
std::string export_dot(const Tournament& t, const std::optional<Ordering>& order = std::nullopt);

}  // namespace tourn

#endif
