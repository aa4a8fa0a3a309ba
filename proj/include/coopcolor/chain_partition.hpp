#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "coopcolor/hypergraph.hpp"

namespace coopcolor {

// Z_n together with a permutation a of Z_n: the two interleaved circular
// orders the partition engine works against.
struct TwoCycleInstance {
    int n = 0;
    std::vector<int> a;

    void validate() const;
};

// Bipartition of Z_n. side[v] == 0 puts v in B, side[v] == 1 in R.
struct BRPartition {
    std::vector<std::uint8_t> side;

    std::vector<VertexId> blue() const;
    std::vector<VertexId> red() const;
};

enum class PartitionCase {
    Even,
    OddDNonempty,
    OddPivotXY,  // pivot case with x < y
    OddPivotYX,  // mirrored pivot case with x > y
    OddSmallCase,
};

const char* to_string(PartitionCase c);

struct EdgePair {
    VertexId u = 0;
    VertexId v = 0;
};

struct ComponentTrace {
    std::vector<VertexId> vertices;       // discovery order
    std::vector<std::uint8_t> colors;     // parallel to vertices, 0 = B
};

struct PartitionTrace {
    PartitionCase caseTag = PartitionCase::Even;
    std::vector<EdgePair> keptBlue;
    std::vector<EdgePair> keptRed;
    std::vector<VertexId> removedVertices;

    struct RemovalPivot {  // odd case, D nonempty
        VertexId v = 0;
        int j = 0;
        VertexId u = 0;
    };
    struct SwapPivot {  // odd case, D empty, pivot k
        VertexId k = 0;
        int x = 0;
        int y = 0;
    };
    std::optional<RemovalPivot> removal;
    std::optional<SwapPivot> swap;

    std::vector<ComponentTrace> components;
};

struct BRWitness {
    bool blue_side = true;           // true: a set contained in B, false: in R
    std::vector<VertexId> set;
};

struct BRVerdict {
    bool ok = true;
    std::optional<BRWitness> witness;

    explicit operator bool() const { return ok; }
};

// The canonical constraint predicate: OK iff {0,1} is not contained in B,
// {i,i+1,i+2} (mod n) is not contained in B for every i != 0, {a_0,a_1} is
// not contained in R, and {a_i,a_{i+1},a_{i+2}} (positions mod n) is not
// contained in R for every i != 0. Containment of these leading subsets
// implies the conclusion for interval sets of any larger size.
BRVerdict check_br_constraints(const TwoCycleInstance& inst, const BRPartition& p);

// Constructive partition of Z_n against the two circular orders; the output
// always passes check_br_constraints. Deterministic: all tie-breaks are
// fixed (smallest removable vertex, smallest pivot, component's lowest
// vertex goes to B unless a forced vertex pins the orientation).
std::pair<BRPartition, PartitionTrace> partition_two_cycles(const TwoCycleInstance& inst);

// Rotates the circular order so the (at most one) 2-edge starts at position
// 0; returns the applied rotation offset. Two or more 2-edges raise
// UnsupportedInstanceError.
std::pair<ChainSystem, int> canonicalize_chain(const ChainSystem& c);

// Cooperative 2-coloring of two chain systems on the same vertex set, each
// with at most one 2-edge and all other edges of size >= 3. Class 0 is
// independent in h1's hypergraph, class 1 in h2's.
CoopColoring coop_color_chain_pair(const ChainSystem& h1, const ChainSystem& h2);

}  // namespace coopcolor
