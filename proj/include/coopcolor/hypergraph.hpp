#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coopcolor/errors.hpp"

namespace coopcolor {

// Vertices are dense integers 0..n-1; any external ids live in the CLI layer.
using VertexId = std::int32_t;

enum class HypergraphKind { Explicit, CompleteKPartite };

// A hypergraph on n vertices. Edges are stored sorted ascending. When
// `parts` is non-empty the hypergraph is declared k-partite: parts are
// pairwise disjoint, cover [0, n), and every explicit edge meets each part
// in exactly one vertex. A CompleteKPartite hypergraph keeps its edge list
// empty; the edges are implicitly all transversals of the parts.
struct Hypergraph {
    int n = 0;
    HypergraphKind kind = HypergraphKind::Explicit;
    std::vector<std::vector<VertexId>> edges;
    std::vector<std::vector<VertexId>> parts;

    bool is_partite() const { return !parts.empty(); }
    int part_count() const { return static_cast<int>(parts.size()); }
    void validate() const;
};

// Sorts each edge and validates; repeated vertices inside an edge are a
// ValidationError, not deduplicated.
Hypergraph make_explicit_hypergraph(int n, std::vector<std::vector<VertexId>> edges,
                                    std::vector<std::vector<VertexId>> parts = {});

Hypergraph make_complete_kpartite(int n, std::vector<std::vector<VertexId>> parts);

// A family of hypergraphs on one shared vertex set.
struct CoopInstance {
    int n = 0;
    std::vector<Hypergraph> hypergraphs;

    int size() const { return static_cast<int>(hypergraphs.size()); }
    void validate() const;
};

// assignment[v] is the index of the hypergraph whose class receives v.
// Empty classes are legal.
struct CoopColoring {
    std::vector<int> assignment;
};

struct EdgeWitness {
    int hypergraph = -1;
    std::vector<VertexId> edge;
};

struct CoopVerdict {
    bool ok = true;
    std::optional<EdgeWitness> witness;

    explicit operator bool() const { return ok; }
};

// A circular run-structured view: vertices laid out on a circle (`order`),
// each interval denoting the run order[start..start+len-1] (positions mod n).
struct Interval {
    int start = 0;
    int len = 0;
};

struct ChainSystem {
    int n = 0;
    std::vector<VertexId> order;  // permutation of [0, n), circular
    std::vector<Interval> intervals;
    bool closed = true;

    void validate() const;
    std::vector<VertexId> interval_vertices(const Interval& iv) const;
};

// Construction-time validation; additionally rejects wrapping intervals when
// closed == false. (Wrapping is fine after rotation, see canonicalize_chain.)
ChainSystem make_chain_system(int n, std::vector<VertexId> order,
                              std::vector<Interval> intervals, bool closed);

struct ChainInstance {
    Hypergraph hypergraph;
    ChainSystem chain;
};

// True iff no edge of h is fully contained in s (s: distinct vertex ids).
// For CompleteKPartite this never materializes edges: s is independent iff
// it misses at least one part entirely.
bool is_independent(const Hypergraph& h, const std::vector<VertexId>& s);

// OK iff class I_j = {v : assignment[v] = j} is independent in hypergraph j
// for every j; otherwise the first violating (j, edge) pair.
CoopVerdict verify_coop_coloring(const CoopInstance& inst, const CoopColoring& c);

ChainInstance make_tight_cycle(int n, int k);
ChainInstance make_loose_cycle(int m_edges, int k);
ChainInstance make_tight_path(int n, int k);
ChainInstance make_loose_path(int m_edges, int k);

// Maximum number of edges incident to a single vertex. Closed form for
// CompleteKPartite (product of the other parts' sizes, maximized over parts).
long long max_degree(const Hypergraph& h);

// Explicit edge list of a CompleteKPartite hypergraph; refuses to build more
// than `cap` edges. Explicit hypergraphs are returned unchanged.
Hypergraph materialize_edges(const Hypergraph& h, long long cap = 1000000);

// The hypergraph whose edges are exactly the chain's interval vertex sets.
Hypergraph chain_hypergraph(const ChainSystem& c);

}  // namespace coopcolor
