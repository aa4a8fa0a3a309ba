#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coopcolor/hypergraph.hpp"

namespace coopcolor {

// The explicit family on [k]^m: vertex id <-> vector bijection
// id = sum_t (v_t - 1) * k^(t-1), hypergraph j partitioned by the j-th
// component. No family of m such hypergraphs admits a cooperative coloring.
struct LowerBoundFamily {
    int k = 0;
    int m = 0;
    CoopInstance instance;
};

LowerBoundFamily build_lower_bound_family(int k, int m);

// Vertex id of the vector (missedPart[0], ..., missedPart[m-1]); entries are
// 1-based part indices. If each class I_j avoids part V_j^{missedPart[j]},
// this vertex lies in no class.
VertexId uncovered_diagonal_vertex(const LowerBoundFamily& fam,
                                   const std::vector<int>& missedPart);

struct LowerBoundVerdict {
    bool ok = true;
    std::string detail;

    explicit operator bool() const { return ok; }
};

// Checks, for every one of the k^m part-miss combinations, that the diagonal
// vertex is covered by no class when classes are the maximal independent
// sets V \ V_j^{missedPart[j]}. Membership is tested against the constructed
// parts, not re-derived from digit arithmetic.
LowerBoundVerdict verify_lower_bound(const LowerBoundFamily& fam);

struct Bounds {
    double lower = 0.0;
    double upper = 0.0;
};

// lower = log_k(d) / (k-1); upper = k*(1+epsilon)*((k-1)*d/ln d)^(1/(k-1)).
Bounds compute_bounds(int k, double d, double epsilon);

// Informational check e * d^-4 * (2*(k-1)^2*d^3 + 1) <= 1 with m capped at
// 2d. Diagnostic only; plays no role in any algorithm.
double lll_diagnostic(int k, double d);

// Per-hypergraph part membership: part_of[j][v] is the 0-based part index of
// v in hypergraph j.
struct KPartiteFamilyView {
    int k = 0;
    std::vector<std::vector<int>> part_of;
};

KPartiteFamilyView make_kpartite_view(const CoopInstance& inst);

struct SemiRandomConfig {
    double epsilon = 0.1;
    std::uint64_t seed = 0;
    std::optional<int> maxRounds;  // default: 10 * n
    enum class BadVertexRule { LowestId } badVertexRule = BadVertexRule::LowestId;
};

struct AssignmentState {
    KPartiteFamilyView view;
    // J[v][i]: sorted indices j with v in part i of hypergraph j.
    std::vector<std::vector<std::vector<int>>> J;
    std::vector<int> wclass;  // 0-based class W_i per vertex
    std::vector<int> chosen;  // chosen index j(v), -1 when unset
    // pruned[v]: the surviving index set J'_k(v) for last-class vertices.
    std::vector<std::vector<int>> pruned;
};

// Computes J and the W-classes; chosen and pruned start empty. The
// membership threshold |J_i(v)| >= m/k is evaluated as k*|J_i(v)| >= m in
// integer arithmetic.
AssignmentState build_assignment_state(const CoopInstance& inst);

struct SemiRandomResult {
    bool success = false;
    CoopColoring coloring;           // valid iff success
    int rounds = 0;                  // resampling iterations performed
    std::vector<VertexId> badVertices;  // surviving bad vertices on abort
};

// The semi-random cooperative coloring process: step-1 vertices draw a
// uniform index from J_i, last-class vertices take the smallest unblocked
// index; empty surviving sets trigger local resampling (re-draw exactly the
// step-1 choices underlying the lowest-id bad vertex) until success or the
// round cap. Every success is checked with verify_coop_coloring before
// returning.
SemiRandomResult semi_random_coloring(const CoopInstance& inst,
                                      const SemiRandomConfig& cfg);

// Random degree-capped k-partite family: each hypergraph draws an
// independent uniformly random balanced partition into k parts, then
// accepts uniformly random transversal edges while no vertex exceeds dmax.
// Stops after n*dmax/k accepted edges or 50*n*dmax rejections.
CoopInstance gen_random_kpartite(int k, int m, int n, int dmax, std::uint64_t seed);

}  // namespace coopcolor
