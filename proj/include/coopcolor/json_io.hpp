#pragma once

#include <string>

#include <json.hpp>

#include "coopcolor/chain_partition.hpp"
#include "coopcolor/hypergraph.hpp"

namespace coopcolor {

using json = nlohmann::json;

// Instance document:
//   {"n": int, "hypergraphs": [{"kind": "explicit"|"complete-kpartite",
//                               "edges": [[int,...],...], "parts": [[int,...],...]?}]}
// The implicit power-family form {"type":"complete-kpartite-power","k":..,"m":..}
// is also accepted on read.
json instance_to_json(const CoopInstance& inst);
CoopInstance instance_from_json(const json& doc);

// Chain document:
//   {"type":"chain","n":int,"closed":bool,"order":[int,...],"intervals":[[start,len],...]}
json chain_to_json(const ChainSystem& c);
ChainSystem chain_from_json(const json& doc);

// Coloring document: {"m": int, "assignment": [int,...]}
json coloring_to_json(const CoopColoring& c, int m);
CoopColoring coloring_from_json(const json& doc);

// Partition document: {"n": int, "B": [...], "R": [...], "caseTag": string}
json partition_to_json(const TwoCycleInstance& inst, const BRPartition& p,
                       const PartitionTrace& trace);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& doc);

}  // namespace coopcolor
