#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "coopcolor/chain_partition.hpp"
#include "coopcolor/hypergraph.hpp"
#include "coopcolor/multipartite.hpp"
#include "coopcolor/oracle.hpp"

namespace py = pybind11;
using namespace coopcolor;

namespace {

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::None: return "none";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

TwoCycleInstance tci(int n, std::vector<int> a) {
    TwoCycleInstance t;
    t.n = n;
    t.a = std::move(a);
    return t;
}

}  // namespace

PYBIND11_MODULE(coopcolor_core, m) {
    m.doc() = "cooperative coloring of hypergraph families";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<UnsupportedInstanceError>(m, "UnsupportedInstanceError",
                                                     PyExc_ValueError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    py::class_<Hypergraph>(m, "Hypergraph")
        .def_readonly("n", &Hypergraph::n)
        .def_property_readonly("kind",
                               [](const Hypergraph& h) {
                                   return h.kind == HypergraphKind::Explicit
                                              ? "explicit"
                                              : "complete-kpartite";
                               })
        .def_readonly("edges", &Hypergraph::edges)
        .def_readonly("parts", &Hypergraph::parts)
        .def("max_degree", [](const Hypergraph& h) { return max_degree(h); })
        .def("is_independent",
             [](const Hypergraph& h, const std::vector<VertexId>& s) {
                 return is_independent(h, s);
             },
             py::arg("vertices"));

    m.def("explicit_hypergraph",
          [](int n, std::vector<std::vector<VertexId>> edges,
             std::vector<std::vector<VertexId>> parts) {
              return make_explicit_hypergraph(n, std::move(edges), std::move(parts));
          },
          py::arg("n"), py::arg("edges"),
          py::arg("parts") = std::vector<std::vector<VertexId>>{});
    m.def("complete_kpartite", &make_complete_kpartite, py::arg("n"), py::arg("parts"));
    m.def("materialize_edges", &materialize_edges, py::arg("hypergraph"),
          py::arg("cap") = 1000000LL);

    py::class_<CoopInstance>(m, "CoopInstance")
        .def(py::init([](int n, std::vector<Hypergraph> hs) {
                 CoopInstance inst{n, std::move(hs)};
                 inst.validate();
                 return inst;
             }),
             py::arg("n"), py::arg("hypergraphs"))
        .def_readonly("n", &CoopInstance::n)
        .def_readonly("hypergraphs", &CoopInstance::hypergraphs);

    m.def("verify_coop_coloring",
          [](const CoopInstance& inst, const std::vector<int>& assignment) {
              auto v = verify_coop_coloring(inst, CoopColoring{assignment});
              py::dict out;
              out["ok"] = v.ok;
              if (v.witness) {
                  out["hypergraph"] = v.witness->hypergraph;
                  out["edge"] = v.witness->edge;
              }
              return out;
          },
          py::arg("instance"), py::arg("assignment"));

    py::class_<ChainSystem>(m, "ChainSystem")
        .def(py::init([](int n, std::vector<VertexId> order,
                         std::vector<std::pair<int, int>> intervals, bool closed) {
                 std::vector<Interval> ivs;
                 ivs.reserve(intervals.size());
                 for (auto [s, l] : intervals) ivs.push_back({s, l});
                 return make_chain_system(n, std::move(order), std::move(ivs), closed);
             }),
             py::arg("n"), py::arg("order"), py::arg("intervals"), py::arg("closed"))
        .def_readonly("n", &ChainSystem::n)
        .def_readonly("order", &ChainSystem::order)
        .def_readonly("closed", &ChainSystem::closed)
        .def_property_readonly("intervals", [](const ChainSystem& c) {
            std::vector<std::pair<int, int>> out;
            for (const auto& iv : c.intervals) out.emplace_back(iv.start, iv.len);
            return out;
        });

    m.def("chain_hypergraph", &chain_hypergraph, py::arg("chain"));

    auto chain_pair_fn = [](const ChainInstance& ci) {
        return py::make_tuple(ci.hypergraph, ci.chain);
    };
    m.def("tight_cycle",
          [=](int n, int k) { return chain_pair_fn(make_tight_cycle(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("loose_cycle",
          [=](int m_edges, int k) { return chain_pair_fn(make_loose_cycle(m_edges, k)); },
          py::arg("m"), py::arg("k"));
    m.def("tight_path",
          [=](int n, int k) { return chain_pair_fn(make_tight_path(n, k)); },
          py::arg("n"), py::arg("k"));
    m.def("loose_path",
          [=](int m_edges, int k) { return chain_pair_fn(make_loose_path(m_edges, k)); },
          py::arg("m"), py::arg("k"));

    m.def("partition_two_cycles",
          [](int n, std::vector<int> a) {
              auto [p, trace] = partition_two_cycles(tci(n, std::move(a)));
              py::dict out;
              out["B"] = p.blue();
              out["R"] = p.red();
              out["case"] = to_string(trace.caseTag);
              return out;
          },
          py::arg("n"), py::arg("a"));

    m.def("check_br_constraints",
          [](int n, std::vector<int> a, const std::vector<int>& side) {
              BRPartition p;
              p.side.assign(side.begin(), side.end());
              auto v = check_br_constraints(tci(n, std::move(a)), p);
              py::dict out;
              out["ok"] = v.ok;
              if (v.witness) {
                  out["blue_side"] = v.witness->blue_side;
                  out["set"] = v.witness->set;
              }
              return out;
          },
          py::arg("n"), py::arg("a"), py::arg("side"));

    m.def("coop_color_chain_pair",
          [](const ChainSystem& c1, const ChainSystem& c2) {
              return coop_color_chain_pair(c1, c2).assignment;
          },
          py::arg("chain1"), py::arg("chain2"));

    m.def("lower_bound_family",
          [](int k, int mm) { return build_lower_bound_family(k, mm).instance; },
          py::arg("k"), py::arg("m"));
    m.def("verify_lower_bound",
          [](int k, int mm) {
              auto v = verify_lower_bound(build_lower_bound_family(k, mm));
              return py::make_tuple(v.ok, v.detail);
          },
          py::arg("k"), py::arg("m"));
    m.def("compute_bounds",
          [](int k, double d, double epsilon) {
              auto b = compute_bounds(k, d, epsilon);
              return py::make_tuple(b.lower, b.upper);
          },
          py::arg("k"), py::arg("d"), py::arg("epsilon") = 0.1);
    m.def("lll_diagnostic", &lll_diagnostic, py::arg("k"), py::arg("d"));

    m.def("semi_random_coloring",
          [](const CoopInstance& inst, std::uint64_t seed, double epsilon,
             std::optional<int> max_rounds) {
              SemiRandomConfig cfg;
              cfg.seed = seed;
              cfg.epsilon = epsilon;
              cfg.maxRounds = max_rounds;
              auto res = semi_random_coloring(inst, cfg);
              py::dict out;
              out["success"] = res.success;
              out["rounds"] = res.rounds;
              if (res.success) {
                  out["assignment"] = res.coloring.assignment;
              } else {
                  out["bad_vertices"] = res.badVertices;
              }
              return out;
          },
          py::arg("instance"), py::arg("seed"), py::arg("epsilon") = 0.1,
          py::arg("max_rounds") = std::nullopt);

    m.def("gen_random_kpartite", &gen_random_kpartite, py::arg("k"), py::arg("m"),
          py::arg("n"), py::arg("dmax"), py::arg("seed"));

    m.def("exact_coop_coloring",
          [](const CoopInstance& inst, long long max_assignments, int max_vertices) {
              SearchBudget budget;
              budget.maxAssignments = max_assignments;
              budget.maxVertices = max_vertices;
              auto r = exact_coop_coloring(inst, budget);
              py::dict out;
              out["status"] = status_name(r.status);
              out["visited"] = r.visited;
              if (r.status == SearchStatus::Found) out["assignment"] = r.coloring.assignment;
              return out;
          },
          py::arg("instance"), py::arg("max_assignments") = 100000000LL,
          py::arg("max_vertices") = 32);

    m.def("exists_br_partition",
          [](int n, std::vector<int> a) {
              auto r = exists_br_partition(tci(n, std::move(a)));
              py::dict out;
              out["found"] = r.found;
              if (r.found) {
                  out["B"] = r.partition.blue();
                  out["R"] = r.partition.red();
              }
              return out;
          },
          py::arg("n"), py::arg("a"));

    m.def("reduce_to_graphs",
          [](const CoopInstance& inst) { return reduce_to_graphs(inst); },
          py::arg("instance"));
}
