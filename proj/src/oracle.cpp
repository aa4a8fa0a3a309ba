#include "coopcolor/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace coopcolor {

namespace {

// Per-hypergraph data for incremental conflict checks during backtracking.
struct SolverHypergraph {
    const Hypergraph* h = nullptr;
    // Explicit: edges indexed by their largest vertex, so the containment
    // check fires exactly when the last vertex of an edge is assigned.
    std::vector<std::vector<const std::vector<VertexId>*>> edges_by_max;
    // Implicit complete k-partite: per-part counts of class members.
    std::vector<int> part_hits;
    int parts_hit = 0;
};

}  // namespace

SearchResult exact_coop_coloring(const CoopInstance& inst, const SearchBudget& budget) {
    inst.validate();
    if (budget.maxAssignments <= 0 || budget.maxVertices <= 0) {
        throw ParameterError("search budget must be positive");
    }
    const int n = inst.n;
    const int m = inst.size();
    SearchResult res;
    if (n > budget.maxVertices) {
        res.status = SearchStatus::BudgetExceeded;
        return res;
    }

    std::vector<SolverHypergraph> sh(static_cast<std::size_t>(m));
    std::vector<std::vector<int>> part_of;  // only filled for implicit hypergraphs
    part_of.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Hypergraph& h = inst.hypergraphs[static_cast<std::size_t>(j)];
        sh[static_cast<std::size_t>(j)].h = &h;
        if (h.kind == HypergraphKind::Explicit) {
            sh[static_cast<std::size_t>(j)].edges_by_max.resize(static_cast<std::size_t>(n));
            for (const auto& e : h.edges) {
                sh[static_cast<std::size_t>(j)]
                    .edges_by_max[static_cast<std::size_t>(e.back())]
                    .push_back(&e);
            }
        } else {
            sh[static_cast<std::size_t>(j)].part_hits.assign(h.parts.size(), 0);
            auto& po = part_of[static_cast<std::size_t>(j)];
            po.assign(static_cast<std::size_t>(n), -1);
            for (std::size_t p = 0; p < h.parts.size(); ++p) {
                for (VertexId v : h.parts[p]) po[static_cast<std::size_t>(v)] = static_cast<int>(p);
            }
        }
    }

    std::vector<int> assign(static_cast<std::size_t>(n), -1);
    long long visited = 0;

    auto conflicts = [&](int v, int j) {
        SolverHypergraph& s = sh[static_cast<std::size_t>(j)];
        if (s.h->kind == HypergraphKind::Explicit) {
            for (const auto* e : s.edges_by_max[static_cast<std::size_t>(v)]) {
                bool all = true;
                for (VertexId u : *e) {
                    if (u != v && assign[static_cast<std::size_t>(u)] != j) {
                        all = false;
                        break;
                    }
                }
                if (all) return true;
            }
            return false;
        }
        // Complete k-partite: the class contains an edge as soon as it hits
        // every part.
        const int p = part_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
        const int hit_after =
            s.parts_hit + (s.part_hits[static_cast<std::size_t>(p)] == 0 ? 1 : 0);
        return hit_after == static_cast<int>(s.h->parts.size());
    };

    auto apply = [&](int v, int j) {
        assign[static_cast<std::size_t>(v)] = j;
        SolverHypergraph& s = sh[static_cast<std::size_t>(j)];
        if (s.h->kind == HypergraphKind::CompleteKPartite) {
            const int p = part_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
            if (s.part_hits[static_cast<std::size_t>(p)]++ == 0) ++s.parts_hit;
        }
    };
    auto undo = [&](int v) {
        const int j = assign[static_cast<std::size_t>(v)];
        SolverHypergraph& s = sh[static_cast<std::size_t>(j)];
        if (s.h->kind == HypergraphKind::CompleteKPartite) {
            const int p = part_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
            if (--s.part_hits[static_cast<std::size_t>(p)] == 0) --s.parts_hit;
        }
        assign[static_cast<std::size_t>(v)] = -1;
    };

    // Iterative DFS over (vertex, next class to try).
    std::vector<int> next_class(static_cast<std::size_t>(n) + 1, 0);
    int v = 0;
    for (;;) {
        if (v == n) {
            res.status = SearchStatus::Found;
            res.coloring.assignment = assign;
            res.visited = visited;
            if (!verify_coop_coloring(inst, res.coloring)) {
                throw InvariantError("exact search produced an invalid coloring");
            }
            return res;
        }
        int j = next_class[static_cast<std::size_t>(v)];
        bool advanced = false;
        while (j < m) {
            if (++visited > budget.maxAssignments) {
                res.status = SearchStatus::BudgetExceeded;
                res.visited = visited;
                return res;
            }
            if (!conflicts(v, j)) {
                apply(v, j);
                next_class[static_cast<std::size_t>(v)] = j + 1;
                next_class[static_cast<std::size_t>(v) + 1] = 0;
                ++v;
                advanced = true;
                break;
            }
            ++j;
        }
        if (advanced) continue;
        // Exhausted classes at v: backtrack.
        next_class[static_cast<std::size_t>(v)] = 0;
        if (v == 0) {
            res.status = SearchStatus::None;
            res.visited = visited;
            return res;
        }
        --v;
        undo(v);
    }
}

BRSearchResult exists_br_partition(const TwoCycleInstance& inst) {
    inst.validate();
    if (inst.n > 25) throw ParameterError("br search: n must be <= 25");
    const int n = inst.n;
    BRSearchResult res;
    res.partition.side.assign(static_cast<std::size_t>(n), 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        for (int v = 0; v < n; ++v) {
            res.partition.side[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>((mask >> v) & 1u);
        }
        if (check_br_constraints(inst, res.partition)) {
            res.found = true;
            return res;
        }
    }
    res.found = false;
    res.partition.side.clear();
    return res;
}

CoopInstance reduce_to_graphs(const CoopInstance& inst, ReductionSelector selector) {
    inst.validate();
    (void)selector;  // only FirstTwoById ships
    CoopInstance out;
    out.n = inst.n;
    for (const Hypergraph& h0 : inst.hypergraphs) {
        const Hypergraph h = h0.kind == HypergraphKind::CompleteKPartite
                                 ? materialize_edges(h0)
                                 : h0;
        std::set<std::pair<VertexId, VertexId>> pairs;
        for (const auto& e : h.edges) {
            if (e.size() < 2) {
                throw ValidationError("reduction requires every edge to have >= 2 vertices");
            }
            pairs.insert({e[0], e[1]});  // edges are sorted: two smallest ids
        }
        std::vector<std::vector<VertexId>> edges;
        for (const auto& [u, v] : pairs) edges.push_back({u, v});
        out.hypergraphs.push_back(make_explicit_hypergraph(inst.n, std::move(edges)));
    }
    return out;
}

}  // namespace coopcolor
