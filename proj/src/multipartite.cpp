#include "coopcolor/multipartite.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "coopcolor/rng.hpp"

namespace coopcolor {

namespace {

long long checked_power(int k, int m, long long guard) {
    long long p = 1;
    for (int t = 0; t < m; ++t) {
        p *= k;
        if (p > guard) {
            throw ParameterError("k^m exceeds guard of " + std::to_string(guard));
        }
    }
    return p;
}

}  // namespace

LowerBoundFamily build_lower_bound_family(int k, int m) {
    if (k < 3) throw ParameterError("lower-bound family: k must be >= 3");
    if (m < 1) throw ParameterError("lower-bound family: m must be >= 1");
    const long long n = checked_power(k, m, 10000000);

    LowerBoundFamily fam;
    fam.k = k;
    fam.m = m;
    fam.instance.n = static_cast<int>(n);
    for (int j = 0; j < m; ++j) {
        long long stride = 1;
        for (int t = 0; t < j; ++t) stride *= k;
        std::vector<std::vector<VertexId>> parts(static_cast<std::size_t>(k));
        for (long long v = 0; v < n; ++v) {
            const int digit = static_cast<int>((v / stride) % k);
            parts[static_cast<std::size_t>(digit)].push_back(static_cast<VertexId>(v));
        }
        fam.instance.hypergraphs.push_back(
            make_complete_kpartite(static_cast<int>(n), std::move(parts)));
    }
    return fam;
}

VertexId uncovered_diagonal_vertex(const LowerBoundFamily& fam,
                                   const std::vector<int>& missedPart) {
    if (static_cast<int>(missedPart.size()) != fam.m) {
        throw ValidationError("missed-part vector length does not match m");
    }
    long long id = 0;
    long long stride = 1;
    for (int j = 0; j < fam.m; ++j) {
        const int i = missedPart[static_cast<std::size_t>(j)];
        if (i < 1 || i > fam.k) throw ValidationError("part index outside [1, k]");
        id += static_cast<long long>(i - 1) * stride;
        stride *= fam.k;
    }
    return static_cast<VertexId>(id);
}

LowerBoundVerdict verify_lower_bound_impl(const LowerBoundFamily& fam) {
    const long long combos = checked_power(fam.k, fam.m, 1000000);
    (void)combos;
    std::vector<int> missed(static_cast<std::size_t>(fam.m), 1);
    for (;;) {
        const VertexId v = uncovered_diagonal_vertex(fam, missed);
        for (int j = 0; j < fam.m; ++j) {
            const auto& part = fam.instance.hypergraphs[static_cast<std::size_t>(j)]
                                   .parts[static_cast<std::size_t>(missed[static_cast<std::size_t>(j)] - 1)];
            // v must sit in the avoided part of every hypergraph, hence in no class.
            if (!std::binary_search(part.begin(), part.end(), v)) {
                std::string d = "diagonal vertex " + std::to_string(v) +
                                " is covered by class " + std::to_string(j);
                return {false, d};
            }
        }
        int j = 0;
        while (j < fam.m && missed[static_cast<std::size_t>(j)] == fam.k) {
            missed[static_cast<std::size_t>(j)] = 1;
            ++j;
        }
        if (j == fam.m) break;
        ++missed[static_cast<std::size_t>(j)];
    }
    return {};
}

LowerBoundVerdict verify_lower_bound(const LowerBoundFamily& fam) {
    fam.instance.validate();
    return verify_lower_bound_impl(fam);
}

Bounds compute_bounds(int k, double d, double epsilon) {
    if (k < 2) throw ParameterError("bounds: k must be >= 2");
    if (d < 2.0) throw ParameterError("bounds: d must be >= 2");
    if (epsilon <= 0.0) throw ParameterError("bounds: epsilon must be positive");
    Bounds b;
    b.lower = std::log(d) / std::log(static_cast<double>(k)) / (k - 1);
    b.upper = k * (1.0 + epsilon) *
              std::pow((k - 1) * d / std::log(d), 1.0 / (k - 1));
    return b;
}

double lll_diagnostic(int k, double d) {
    if (k < 2) throw ParameterError("diagnostic: k must be >= 2");
    if (d < 2.0) throw ParameterError("diagnostic: d must be >= 2");
    const double e = std::exp(1.0);
    const double km1 = static_cast<double>(k - 1);
    return e / (d * d * d * d) * (2.0 * km1 * km1 * d * d * d + 1.0);
}

KPartiteFamilyView make_kpartite_view(const CoopInstance& inst) {
    inst.validate();
    KPartiteFamilyView view;
    const int m = inst.size();
    view.part_of.resize(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Hypergraph& h = inst.hypergraphs[static_cast<std::size_t>(j)];
        if (!h.is_partite()) {
            throw ValidationError("hypergraph " + std::to_string(j) + " has no parts");
        }
        if (j == 0) {
            view.k = h.part_count();
        } else if (h.part_count() != view.k) {
            throw ValidationError("hypergraphs disagree on the number of parts");
        }
        auto& po = view.part_of[static_cast<std::size_t>(j)];
        po.assign(static_cast<std::size_t>(inst.n), -1);
        for (int p = 0; p < h.part_count(); ++p) {
            for (VertexId v : h.parts[static_cast<std::size_t>(p)]) {
                po[static_cast<std::size_t>(v)] = p;
            }
        }
        // validate() already guarantees full disjoint coverage.
    }
    return view;
}

AssignmentState build_assignment_state(const CoopInstance& inst) {
    AssignmentState st;
    st.view = make_kpartite_view(inst);
    const int n = inst.n;
    const int m = inst.size();
    const int k = st.view.k;

    st.J.assign(static_cast<std::size_t>(n),
                std::vector<std::vector<int>>(static_cast<std::size_t>(k)));
    for (int j = 0; j < m; ++j) {
        for (int v = 0; v < n; ++v) {
            const int i = st.view.part_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
            st.J[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)].push_back(j);
        }
    }
    st.wclass.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < k; ++i) {
            const long long size =
                static_cast<long long>(st.J[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)].size());
            if (size * k >= m) {
                st.wclass[static_cast<std::size_t>(v)] = i;
                break;
            }
        }
        if (st.wclass[static_cast<std::size_t>(v)] == -1) {
            throw InvariantError("pigeonhole failed: no W-class for a vertex");
        }
    }
    st.chosen.assign(static_cast<std::size_t>(n), -1);
    st.pruned.assign(static_cast<std::size_t>(n), {});
    return st;
}

namespace {

// Surviving index set J'_k(w) for a last-class vertex w: drop every j for
// which some edge of hypergraph j through w has all its other vertices u
// sitting in the W-class matching their part in G_j and assigned j.
std::vector<int> surviving_indices(const CoopInstance& inst, const AssignmentState& st,
                                   VertexId w,
                                   const std::vector<std::vector<std::vector<int>>>& incident,
                                   const std::vector<std::vector<char>>& part_blocked) {
    const int k = st.view.k;
    std::vector<int> out;
    for (int j : st.J[static_cast<std::size_t>(w)][static_cast<std::size_t>(k - 1)]) {
        const Hypergraph& h = inst.hypergraphs[static_cast<std::size_t>(j)];
        bool blocked = false;
        if (h.kind == HypergraphKind::CompleteKPartite) {
            blocked = true;
            for (int i = 0; i < k - 1 && blocked; ++i) {
                if (!part_blocked[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                    blocked = false;
                }
            }
        } else {
            for (int ei : incident[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)]) {
                const auto& e = h.edges[static_cast<std::size_t>(ei)];
                bool all = true;
                for (VertexId u : e) {
                    if (u == w) continue;
                    const int pu =
                        st.view.part_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
                    if (st.wclass[static_cast<std::size_t>(u)] != pu ||
                        st.chosen[static_cast<std::size_t>(u)] != j) {
                        all = false;
                        break;
                    }
                }
                if (all) {
                    blocked = true;
                    break;
                }
            }
        }
        if (!blocked) out.push_back(j);
    }
    return out;
}

}  // namespace

SemiRandomResult semi_random_coloring(const CoopInstance& inst, const SemiRandomConfig& cfg) {
    if (cfg.epsilon <= 0.0) throw ParameterError("semi-random: epsilon must be positive");
    AssignmentState st = build_assignment_state(inst);
    const int n = inst.n;
    const int m = inst.size();
    const int k = st.view.k;
    const int maxRounds = cfg.maxRounds.value_or(10 * n);
    if (maxRounds < 1) throw ParameterError("semi-random: maxRounds must be >= 1");

    SplitMix64 rng(cfg.seed);

    // Step 1: every vertex of W_i, i < k-1, draws an index from J_i.
    for (int v = 0; v < n; ++v) {
        const int i = st.wclass[static_cast<std::size_t>(v)];
        if (i < k - 1) {
            const auto& J = st.J[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
            st.chosen[static_cast<std::size_t>(v)] =
                J[static_cast<std::size_t>(rng.below(J.size()))];
        }
    }

    std::vector<VertexId> last_verts;
    for (int v = 0; v < n; ++v) {
        if (st.wclass[static_cast<std::size_t>(v)] == k - 1) last_verts.push_back(v);
    }

    // Per-hypergraph incidence lists for explicit edge scans.
    std::vector<std::vector<std::vector<int>>> incident(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Hypergraph& h = inst.hypergraphs[static_cast<std::size_t>(j)];
        if (h.kind == HypergraphKind::Explicit) {
            incident[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
            for (std::size_t ei = 0; ei < h.edges.size(); ++ei) {
                for (VertexId v : h.edges[ei]) {
                    incident[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)]
                        .push_back(static_cast<int>(ei));
                }
            }
        }
    }

    // part_blocked[j][i]: some u in part i of G_j has wclass(u) == i and
    // chosen(u) == j. Recomputed each round; used for implicit hypergraphs.
    auto compute_part_blocked = [&]() {
        std::vector<std::vector<char>> pb(static_cast<std::size_t>(m),
                                          std::vector<char>(static_cast<std::size_t>(k), 0));
        for (int v = 0; v < n; ++v) {
            const int j = st.chosen[static_cast<std::size_t>(v)];
            if (j < 0) continue;
            const int pv = st.view.part_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)];
            if (st.wclass[static_cast<std::size_t>(v)] == pv) {
                pb[static_cast<std::size_t>(j)][static_cast<std::size_t>(pv)] = 1;
            }
        }
        return pb;
    };

    int round = 0;
    for (;;) {
        const auto part_blocked = compute_part_blocked();
        std::vector<VertexId> bad;
        for (VertexId w : last_verts) {
            st.pruned[static_cast<std::size_t>(w)] =
                surviving_indices(inst, st, w, incident, part_blocked);
            if (st.pruned[static_cast<std::size_t>(w)].empty()) bad.push_back(w);
        }
        if (bad.empty()) {
            for (VertexId w : last_verts) {
                st.chosen[static_cast<std::size_t>(w)] = st.pruned[static_cast<std::size_t>(w)].front();
            }
            SemiRandomResult res;
            res.success = true;
            res.rounds = round;
            res.coloring.assignment = st.chosen;
            if (!verify_coop_coloring(inst, res.coloring)) {
                throw InvariantError("semi-random success failed verification");
            }
            return res;
        }
        if (round >= maxRounds) {
            SemiRandomResult res;
            res.success = false;
            res.rounds = round;
            res.badVertices = std::move(bad);
            return res;
        }
        // Resample the step-1 choices underlying the lowest-id bad vertex.
        const VertexId w = bad.front();
        std::set<VertexId> redraw;
        for (int j : st.J[static_cast<std::size_t>(w)][static_cast<std::size_t>(k - 1)]) {
            const Hypergraph& h = inst.hypergraphs[static_cast<std::size_t>(j)];
            if (h.kind == HypergraphKind::CompleteKPartite) {
                for (int v = 0; v < n; ++v) {
                    if (v == w) continue;
                    if (st.view.part_of[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] !=
                            k - 1 &&
                        st.wclass[static_cast<std::size_t>(v)] < k - 1) {
                        redraw.insert(v);
                    }
                }
            } else {
                for (int ei : incident[static_cast<std::size_t>(j)][static_cast<std::size_t>(w)]) {
                    for (VertexId u : h.edges[static_cast<std::size_t>(ei)]) {
                        if (u != w && st.wclass[static_cast<std::size_t>(u)] < k - 1) {
                            redraw.insert(u);
                        }
                    }
                }
            }
        }
        for (VertexId u : redraw) {
            const int i = st.wclass[static_cast<std::size_t>(u)];
            const auto& J = st.J[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
            st.chosen[static_cast<std::size_t>(u)] =
                J[static_cast<std::size_t>(rng.below(J.size()))];
        }
        ++round;
    }
}

CoopInstance gen_random_kpartite(int k, int m, int n, int dmax, std::uint64_t seed) {
    if (k < 3) throw ParameterError("random k-partite: k must be >= 3");
    if (m < 1) throw ParameterError("random k-partite: m must be >= 1");
    if (n < k) throw ParameterError("random k-partite: n must be >= k");
    if (n % k != 0) throw ParameterError("random k-partite: k must divide n");
    if (dmax < 1) throw ParameterError("random k-partite: dmax must be >= 1");

    SplitMix64 rng(seed);
    const int part_size = n / k;
    const long long target = static_cast<long long>(n) * dmax / k;
    const long long reject_cap = 50LL * n * dmax;

    CoopInstance inst;
    inst.n = n;
    for (int j = 0; j < m; ++j) {
        std::vector<VertexId> perm(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) perm[static_cast<std::size_t>(v)] = v;
        rng.shuffle(perm);
        std::vector<std::vector<VertexId>> parts(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            parts[static_cast<std::size_t>(i)].assign(
                perm.begin() + static_cast<std::ptrdiff_t>(i) * part_size,
                perm.begin() + static_cast<std::ptrdiff_t>(i + 1) * part_size);
            std::sort(parts[static_cast<std::size_t>(i)].begin(),
                      parts[static_cast<std::size_t>(i)].end());
        }
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::set<std::vector<VertexId>> seen;
        std::vector<std::vector<VertexId>> edges;
        long long accepted = 0, rejected = 0;
        while (accepted < target && rejected < reject_cap) {
            std::vector<VertexId> e;
            e.reserve(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) {
                const auto& part = parts[static_cast<std::size_t>(i)];
                e.push_back(part[static_cast<std::size_t>(rng.below(part.size()))]);
            }
            std::sort(e.begin(), e.end());
            bool ok = !seen.count(e);
            for (VertexId v : e) {
                if (deg[static_cast<std::size_t>(v)] >= dmax) ok = false;
            }
            if (!ok) {
                ++rejected;
                continue;
            }
            for (VertexId v : e) ++deg[static_cast<std::size_t>(v)];
            seen.insert(e);
            edges.push_back(std::move(e));
            ++accepted;
        }
        inst.hypergraphs.push_back(make_explicit_hypergraph(n, std::move(edges), std::move(parts)));
    }
    inst.validate();
    return inst;
}

}  // namespace coopcolor
