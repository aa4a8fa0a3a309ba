#include "coopcolor/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace coopcolor {

namespace {

std::string id_str(long long v) { return std::to_string(v); }

void check_vertex_range(VertexId v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw ValidationError(std::string(what) + ": vertex id " + id_str(v) +
                              " outside [0, " + id_str(n) + ")");
    }
}

}  // namespace

void Hypergraph::validate() const {
    if (n < 0) throw ValidationError("hypergraph: negative vertex count");
    for (const auto& e : edges) {
        if (e.empty()) throw ValidationError("empty edge");
        for (VertexId v : e) check_vertex_range(v, n, "edge");
        if (!std::is_sorted(e.begin(), e.end())) {
            throw ValidationError("edge not sorted ascending");
        }
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
            throw ValidationError("edge contains a repeated vertex");
        }
    }
    if (kind == HypergraphKind::CompleteKPartite) {
        if (parts.empty()) {
            throw ValidationError("complete-kpartite hypergraph requires parts");
        }
        if (!edges.empty()) {
            throw ValidationError("complete-kpartite hypergraph must keep its edge list empty");
        }
    }
    if (!parts.empty()) {
        std::vector<int> owner(static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (VertexId v : parts[i]) {
                check_vertex_range(v, n, "part");
                if (owner[static_cast<std::size_t>(v)] != -1) {
                    throw ValidationError("parts are not disjoint at vertex " + id_str(v));
                }
                owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        }
        for (int v = 0; v < n; ++v) {
            if (owner[static_cast<std::size_t>(v)] == -1) {
                throw ValidationError("parts do not cover vertex " + id_str(v));
            }
        }
        for (const auto& e : edges) {
            std::vector<char> hit(parts.size(), 0);
            for (VertexId v : e) {
                int p = owner[static_cast<std::size_t>(v)];
                if (hit[static_cast<std::size_t>(p)]) {
                    throw ValidationError("edge meets a part in more than one vertex");
                }
                hit[static_cast<std::size_t>(p)] = 1;
            }
            if (e.size() != parts.size()) {
                throw ValidationError("edge of a partite hypergraph must meet every part");
            }
        }
    }
}

Hypergraph make_explicit_hypergraph(int n, std::vector<std::vector<VertexId>> edges,
                                    std::vector<std::vector<VertexId>> parts) {
    Hypergraph h;
    h.n = n;
    h.kind = HypergraphKind::Explicit;
    for (auto& e : edges) std::sort(e.begin(), e.end());
    for (auto& p : parts) std::sort(p.begin(), p.end());
    h.edges = std::move(edges);
    h.parts = std::move(parts);
    h.validate();
    return h;
}

Hypergraph make_complete_kpartite(int n, std::vector<std::vector<VertexId>> parts) {
    Hypergraph h;
    h.n = n;
    h.kind = HypergraphKind::CompleteKPartite;
    for (auto& p : parts) std::sort(p.begin(), p.end());
    h.parts = std::move(parts);
    h.validate();
    return h;
}

void CoopInstance::validate() const {
    if (hypergraphs.empty()) throw ValidationError("instance: empty hypergraph list");
    for (const auto& h : hypergraphs) {
        if (h.n != n) throw ValidationError("instance: mismatched vertex counts");
        h.validate();
    }
}

void ChainSystem::validate() const {
    if (n < 0) throw ValidationError("chain: negative vertex count");
    if (static_cast<int>(order.size()) != n) {
        throw ValidationError("chain: order length does not match n");
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (VertexId v : order) {
        check_vertex_range(v, n, "chain order");
        if (seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("chain: order is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& iv : intervals) {
        if (iv.start < 0 || iv.start >= n) throw ValidationError("chain: interval start out of range");
        if (iv.len < 2) throw ValidationError("chain: interval of length < 2");
        if (iv.len > n) throw ValidationError("chain: interval longer than the circle");
    }
}

std::vector<VertexId> ChainSystem::interval_vertices(const Interval& iv) const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(iv.len));
    for (int t = 0; t < iv.len; ++t) {
        out.push_back(order[static_cast<std::size_t>((iv.start + t) % n)]);
    }
    return out;
}

ChainSystem make_chain_system(int n, std::vector<VertexId> order,
                              std::vector<Interval> intervals, bool closed) {
    ChainSystem c;
    c.n = n;
    c.order = std::move(order);
    c.intervals = std::move(intervals);
    c.closed = closed;
    c.validate();
    if (!closed) {
        for (const auto& iv : c.intervals) {
            if (iv.start + iv.len > n) {
                throw ValidationError("chain: path interval wraps the linear order");
            }
        }
    }
    return c;
}

bool is_independent(const Hypergraph& h, const std::vector<VertexId>& s) {
    h.validate();
    std::vector<char> in(static_cast<std::size_t>(h.n), 0);
    for (VertexId v : s) {
        check_vertex_range(v, h.n, "query set");
        in[static_cast<std::size_t>(v)] = 1;
    }
    if (h.kind == HypergraphKind::CompleteKPartite) {
        // Independent iff s misses some part entirely.
        for (const auto& part : h.parts) {
            bool hit = false;
            for (VertexId v : part) {
                if (in[static_cast<std::size_t>(v)]) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return true;
        }
        return h.parts.empty();
    }
    for (const auto& e : h.edges) {
        bool contained = true;
        for (VertexId v : e) {
            if (!in[static_cast<std::size_t>(v)]) {
                contained = false;
                break;
            }
        }
        if (contained) return false;
    }
    return true;
}

CoopVerdict verify_coop_coloring(const CoopInstance& inst, const CoopColoring& c) {
    inst.validate();
    const int m = inst.size();
    if (static_cast<int>(c.assignment.size()) != inst.n) {
        throw ValidationError("coloring: assignment length does not match instance");
    }
    for (int v = 0; v < inst.n; ++v) {
        if (c.assignment[static_cast<std::size_t>(v)] < 0 ||
            c.assignment[static_cast<std::size_t>(v)] >= m) {
            throw ValidationError("coloring: class index out of range at vertex " + id_str(v));
        }
    }
    for (int j = 0; j < m; ++j) {
        const Hypergraph& h = inst.hypergraphs[static_cast<std::size_t>(j)];
        std::vector<char> in_class(static_cast<std::size_t>(inst.n), 0);
        for (int v = 0; v < inst.n; ++v) {
            in_class[static_cast<std::size_t>(v)] = (c.assignment[static_cast<std::size_t>(v)] == j);
        }
        if (h.kind == HypergraphKind::CompleteKPartite) {
            bool all_hit = true;
            std::vector<VertexId> witness_edge;
            for (const auto& part : h.parts) {
                VertexId hit = -1;
                for (VertexId v : part) {
                    if (in_class[static_cast<std::size_t>(v)]) {
                        hit = v;
                        break;
                    }
                }
                if (hit == -1) {
                    all_hit = false;
                    break;
                }
                witness_edge.push_back(hit);
            }
            if (all_hit && !h.parts.empty()) {
                std::sort(witness_edge.begin(), witness_edge.end());
                return {false, EdgeWitness{j, std::move(witness_edge)}};
            }
        } else {
            for (const auto& e : h.edges) {
                bool contained = true;
                for (VertexId v : e) {
                    if (!in_class[static_cast<std::size_t>(v)]) {
                        contained = false;
                        break;
                    }
                }
                if (contained) return {false, EdgeWitness{j, e}};
            }
        }
    }
    return {};
}

ChainInstance make_tight_cycle(int n, int k) {
    if (k < 3) throw ParameterError("tight cycle: k must be >= 3");
    if (n <= k) throw ParameterError("tight cycle: n must be >= k+1");
    std::vector<std::vector<VertexId>> edges;
    std::vector<Interval> intervals;
    edges.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<VertexId> e;
        for (int t = 0; t < k; ++t) e.push_back((i + t) % n);
        edges.push_back(std::move(e));
        intervals.push_back({i, k});
    }
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    ChainInstance out;
    out.hypergraph = make_explicit_hypergraph(n, std::move(edges));
    out.chain = make_chain_system(n, std::move(order), std::move(intervals), true);
    return out;
}

ChainInstance make_loose_cycle(int m_edges, int k) {
    if (k < 3) throw ParameterError("loose cycle: k must be >= 3");
    if (m_edges < 3) throw ParameterError("loose cycle: edge count must be >= 3");
    const int n = m_edges * (k - 1);
    std::vector<std::vector<VertexId>> edges;
    std::vector<Interval> intervals;
    for (int i = 0; i < m_edges; ++i) {
        const int start = i * (k - 1);
        std::vector<VertexId> e;
        for (int t = 0; t < k; ++t) e.push_back((start + t) % n);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
        intervals.push_back({start, k});
    }
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    ChainInstance out;
    out.hypergraph = make_explicit_hypergraph(n, std::move(edges));
    out.chain = make_chain_system(n, std::move(order), std::move(intervals), true);
    return out;
}

ChainInstance make_tight_path(int n, int k) {
    if (k < 3) throw ParameterError("tight path: k must be >= 3");
    if (n < k) throw ParameterError("tight path: n must be >= k");
    std::vector<std::vector<VertexId>> edges;
    std::vector<Interval> intervals;
    for (int i = 0; i + k <= n; ++i) {
        std::vector<VertexId> e;
        for (int t = 0; t < k; ++t) e.push_back(i + t);
        edges.push_back(std::move(e));
        intervals.push_back({i, k});
    }
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    ChainInstance out;
    out.hypergraph = make_explicit_hypergraph(n, std::move(edges));
    out.chain = make_chain_system(n, std::move(order), std::move(intervals), false);
    return out;
}

ChainInstance make_loose_path(int m_edges, int k) {
    if (k < 3) throw ParameterError("loose path: k must be >= 3");
    if (m_edges < 1) throw ParameterError("loose path: edge count must be >= 1");
    const int n = m_edges * (k - 1) + 1;
    std::vector<std::vector<VertexId>> edges;
    std::vector<Interval> intervals;
    for (int i = 0; i < m_edges; ++i) {
        const int start = i * (k - 1);
        std::vector<VertexId> e;
        for (int t = 0; t < k; ++t) e.push_back(start + t);
        edges.push_back(std::move(e));
        intervals.push_back({start, k});
    }
    std::vector<VertexId> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    ChainInstance out;
    out.hypergraph = make_explicit_hypergraph(n, std::move(edges));
    out.chain = make_chain_system(n, std::move(order), std::move(intervals), false);
    return out;
}

long long max_degree(const Hypergraph& h) {
    h.validate();
    if (h.kind == HypergraphKind::CompleteKPartite) {
        for (const auto& part : h.parts) {
            if (part.empty()) return 0;  // no transversal exists
        }
        long long best = 0;
        for (std::size_t p = 0; p < h.parts.size(); ++p) {
            long long deg = 1;
            for (std::size_t q = 0; q < h.parts.size(); ++q) {
                if (q != p) deg *= static_cast<long long>(h.parts[q].size());
            }
            best = std::max(best, deg);
        }
        return best;
    }
    std::vector<long long> deg(static_cast<std::size_t>(h.n), 0);
    for (const auto& e : h.edges) {
        for (VertexId v : e) ++deg[static_cast<std::size_t>(v)];
    }
    long long best = 0;
    for (long long d : deg) best = std::max(best, d);
    return best;
}

Hypergraph materialize_edges(const Hypergraph& h, long long cap) {
    h.validate();
    if (h.kind == HypergraphKind::Explicit) return h;
    long long count = 1;
    for (const auto& part : h.parts) {
        count *= static_cast<long long>(part.size());
        if (count > cap) {
            throw ParameterError("materialize: edge count exceeds cap of " + std::to_string(cap));
        }
    }
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(count));
    const int k = h.part_count();
    std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
    if (count > 0) {
        for (;;) {
            std::vector<VertexId> e;
            e.reserve(static_cast<std::size_t>(k));
            for (int p = 0; p < k; ++p) {
                e.push_back(h.parts[static_cast<std::size_t>(p)][idx[static_cast<std::size_t>(p)]]);
            }
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
            int p = k - 1;
            while (p >= 0) {
                if (++idx[static_cast<std::size_t>(p)] < h.parts[static_cast<std::size_t>(p)].size()) break;
                idx[static_cast<std::size_t>(p)] = 0;
                --p;
            }
            if (p < 0) break;
        }
    }
    return make_explicit_hypergraph(h.n, std::move(edges), h.parts);
}

Hypergraph chain_hypergraph(const ChainSystem& c) {
    c.validate();
    std::vector<std::vector<VertexId>> edges;
    edges.reserve(c.intervals.size());
    for (const auto& iv : c.intervals) {
        edges.push_back(c.interval_vertices(iv));
    }
    return make_explicit_hypergraph(c.n, std::move(edges));
}

}  // namespace coopcolor
