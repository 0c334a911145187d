#pragma once

#include <nlohmann/json.hpp>

#include "blockline/blocks.hpp"
#include "blockline/compass2d.hpp"
#include "blockline/geometry2d.hpp"
#include "blockline/optimize2d.hpp"
#include "blockline/set1d.hpp"
#include "blockline/transversal1d.hpp"

namespace blockline {

// All emitters produce insertion-ordered objects so output is byte-stable;
// numbers render as shortest round-trip decimals. Infinite bounds are
// encoded as the strings "inf" / "-inf".
using json = nlohmann::ordered_json;

json set1d_to_json(const ClosedSet1D& set);
ClosedSet1D set1d_from_json(const json& j);

json sequence1d_to_json(const GridSequence1D& seq);
GridSequence1D sequence1d_from_json(const json& j);

json transversal1d_to_json(const SolveResult& result);

json block_partition_to_json(const BlockPartition& part);

json box_set_to_json(const BoxUnionSet2D& set);
BoxUnionSet2D box_set_from_json(const json& j);

json sequence2d_to_json(const GridSequence2D& seq);
GridSequence2D sequence2d_from_json(const json& j);

json transversal2d_to_json(const Transversal2D& t, NormKind kind);
Transversal2D transversal2d_from_json(const json& j);

json jumps_to_json(const std::vector<Jump>& jumps);

// Parses either a JSON array of numbers or CSV text with one value per line.
std::vector<double> parse_values_text(const std::string& text);

}  // namespace blockline
