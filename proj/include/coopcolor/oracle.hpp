#pragma once

#include <vector>

#include "coopcolor/chain_partition.hpp"
#include "coopcolor/hypergraph.hpp"

namespace coopcolor {

struct SearchBudget {
    long long maxAssignments = 100000000;
    int maxVertices = 32;
};

enum class SearchStatus { Found, None, BudgetExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::None;
    CoopColoring coloring;  // valid iff status == Found
    long long visited = 0;  // assignments attempted
};

// Exhaustive backtracking over vertices in id order, class indices
// ascending; a partial assignment is pruned as soon as some edge of
// hypergraph j lies fully in class j. Returns the lexicographically first
// cooperative coloring, exact None, or BudgetExceeded.
SearchResult exact_coop_coloring(const CoopInstance& inst, const SearchBudget& budget = {});

struct BRSearchResult {
    bool found = false;
    BRPartition partition;
};

// Enumerates all 2^n bipartitions (n <= 25) in lexicographic order (all-B
// first, vertex 0 most significant... bit v of the counter sends v to R) and
// returns the first one passing check_br_constraints.
BRSearchResult exists_br_partition(const TwoCycleInstance& inst);

enum class ReductionSelector { FirstTwoById };

// The hyperedge -> 2-vertex-edge reduction: each edge contributes the
// 2-edge of its two selected vertices; duplicates collapse. Any cooperative
// coloring of the reduced 2-uniform family is one of the original.
CoopInstance reduce_to_graphs(const CoopInstance& inst,
                              ReductionSelector selector = ReductionSelector::FirstTwoById);

}  // namespace coopcolor
