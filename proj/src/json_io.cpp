#include "coopcolor/json_io.hpp"

#include <fstream>

#include "coopcolor/multipartite.hpp"

namespace coopcolor {

namespace {

json edges_to_json(const std::vector<std::vector<VertexId>>& edges) {
    json arr = json::array();
    for (const auto& e : edges) arr.push_back(e);
    return arr;
}

std::vector<std::vector<VertexId>> edges_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw ValidationError(std::string(what) + ": expected an array");
    std::vector<std::vector<VertexId>> out;
    for (const auto& e : arr) {
        if (!e.is_array()) throw ValidationError(std::string(what) + ": expected arrays of ints");
        out.push_back(e.get<std::vector<VertexId>>());
    }
    return out;
}

}  // namespace

json instance_to_json(const CoopInstance& inst) {
    inst.validate();
    json doc;
    doc["n"] = inst.n;
    json hs = json::array();
    for (const auto& h : inst.hypergraphs) {
        json hj;
        hj["kind"] = h.kind == HypergraphKind::Explicit ? "explicit" : "complete-kpartite";
        hj["edges"] = edges_to_json(h.edges);
        if (h.is_partite()) hj["parts"] = edges_to_json(h.parts);
        hs.push_back(std::move(hj));
    }
    doc["hypergraphs"] = std::move(hs);
    return doc;
}

CoopInstance instance_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("instance document: expected an object");
    if (doc.contains("type")) {
        const auto type = doc.at("type").get<std::string>();
        if (type != "complete-kpartite-power") {
            throw ValidationError("unknown instance document type: " + type);
        }
        try {
            return build_lower_bound_family(doc.at("k").get<int>(), doc.at("m").get<int>())
                .instance;
        } catch (const json::exception& e) {
            throw ValidationError(std::string("instance document: ") + e.what());
        }
    }
    CoopInstance inst;
    try {
        inst.n = doc.at("n").get<int>();
        for (const auto& hj : doc.at("hypergraphs")) {
            const auto kind = hj.value("kind", std::string("explicit"));
            auto edges = hj.contains("edges")
                             ? edges_from_json(hj.at("edges"), "edges")
                             : std::vector<std::vector<VertexId>>{};
            auto parts = hj.contains("parts")
                             ? edges_from_json(hj.at("parts"), "parts")
                             : std::vector<std::vector<VertexId>>{};
            if (kind == "explicit") {
                inst.hypergraphs.push_back(
                    make_explicit_hypergraph(inst.n, std::move(edges), std::move(parts)));
            } else if (kind == "complete-kpartite") {
                if (!edges.empty()) {
                    throw ValidationError("complete-kpartite hypergraph must not list edges");
                }
                inst.hypergraphs.push_back(make_complete_kpartite(inst.n, std::move(parts)));
            } else {
                throw ValidationError("unknown hypergraph kind: " + kind);
            }
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("instance document: ") + e.what());
    }
    inst.validate();
    return inst;
}

json chain_to_json(const ChainSystem& c) {
    c.validate();
    json doc;
    doc["type"] = "chain";
    doc["n"] = c.n;
    doc["closed"] = c.closed;
    doc["order"] = c.order;
    json ivs = json::array();
    for (const auto& iv : c.intervals) ivs.push_back(json::array({iv.start, iv.len}));
    doc["intervals"] = std::move(ivs);
    return doc;
}

ChainSystem chain_from_json(const json& doc) {
    try {
        if (doc.value("type", std::string()) != "chain") {
            throw ValidationError("chain document: missing type \"chain\"");
        }
        const int n = doc.at("n").get<int>();
        auto order = doc.at("order").get<std::vector<VertexId>>();
        std::vector<Interval> intervals;
        for (const auto& iv : doc.at("intervals")) {
            if (!iv.is_array() || iv.size() != 2) {
                throw ValidationError("chain document: intervals must be [start, len] pairs");
            }
            intervals.push_back({iv[0].get<int>(), iv[1].get<int>()});
        }
        return make_chain_system(n, std::move(order), std::move(intervals),
                                 doc.at("closed").get<bool>());
    } catch (const json::exception& e) {
        throw ValidationError(std::string("chain document: ") + e.what());
    }
}

json coloring_to_json(const CoopColoring& c, int m) {
    json doc;
    doc["m"] = m;
    doc["assignment"] = c.assignment;
    return doc;
}

CoopColoring coloring_from_json(const json& doc) {
    try {
        CoopColoring c;
        c.assignment = doc.at("assignment").get<std::vector<int>>();
        const int m = doc.at("m").get<int>();
        for (int j : c.assignment) {
            if (j < 0 || j >= m) {
                throw ValidationError("coloring document: class index outside [0, m)");
            }
        }
        return c;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("coloring document: ") + e.what());
    }
}

json partition_to_json(const TwoCycleInstance& inst, const BRPartition& p,
                       const PartitionTrace& trace) {
    json doc;
    doc["n"] = inst.n;
    doc["B"] = p.blue();
    doc["R"] = p.red();
    doc["caseTag"] = to_string(trace.caseTag);
    return doc;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    }
    return doc;
}

void save_json_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open " + path + " for writing");
    out << doc.dump(2) << "\n";
}

}  // namespace coopcolor
