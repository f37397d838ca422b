#include "ffchain/serialize.hpp"

namespace ffchain {

using nlohmann::ordered_json;

namespace {

ordered_json indexed_list(const std::vector<Poly>& polys) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : polys) arr.push_back(to_indexed(e));
    return arr;
}

ordered_json indexed_list(const std::vector<std::uint64_t>& indices) {
    ordered_json arr = ordered_json::array();
    for (std::uint64_t i : indices) arr.push_back("#" + std::to_string(i));
    return arr;
}

ordered_json basis_list(const std::vector<IrreduciblePoly>& bases) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : bases) arr.push_back(to_indexed(f.poly()));
    return arr;
}

} // namespace

ordered_json to_json(const Chain& chain) {
    ordered_json j;
    j["p"] = chain.start.characteristic();
    j["n"] = chain.schedule.degree();
    j["bases"] = basis_list(chain.schedule.bases());
    j["start"] = to_indexed(chain.start);
    j["elements"] = indexed_list(chain.elements);
    return j;
}

ordered_json to_json(const CyclePartition& part) {
    ordered_json j;
    j["pair"] = ordered_json::array({to_indexed(part.f1.poly()), to_indexed(part.f2.poly())});
    ordered_json cycles = ordered_json::array();
    for (const auto& c : part.cycles) {
        ordered_json jc;
        jc["len"] = c.length();
        jc["elements"] = indexed_list(c.elements);
        cycles.push_back(std::move(jc));
    }
    j["cycles"] = std::move(cycles);
    j["covered"] = part.covered();
    return j;
}

ordered_json to_json(const Permutation& sigma) {
    ordered_json j;
    j["mapping"] = sigma.mapping;
    j["cycles"] = sigma.cycles;
    j["fixed_points"] = sigma.fixed_points();
    return j;
}

ordered_json to_json(const ClosedLoop& loop) {
    ordered_json j;
    j["bases"] = basis_list(loop.schedule.bases());
    j["k"] = loop.k();
    j["elements"] = indexed_list(loop.elements);
    ordered_json mult = ordered_json::object();
    for (const auto& [index, count] : loop.multiplicities()) {
        if (count > 1) mult["#" + std::to_string(index)] = count;
    }
    j["multiplicities"] = std::move(mult);
    return j;
}

ordered_json to_json(const LoopEnumeration& loops) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& loop : loops.loops) arr.push_back(to_json(loop));
    j["loops"] = std::move(arr);
    ordered_json report = ordered_json::object();
    for (const auto& [elem, entries] : loops.element_report) {
        ordered_json occurrences = ordered_json::array();
        for (const auto& [loop_pos, mult] : entries) {
            occurrences.push_back(ordered_json{{"loop", loop_pos}, {"multiplicity", mult}});
        }
        report["#" + std::to_string(elem)] = std::move(occurrences);
    }
    j["element_report"] = std::move(report);
    return j;
}

ordered_json to_json(const MatchingGraph& graph) {
    ordered_json j;
    j["p"] = graph.p;
    j["n"] = graph.n;
    j["includes_constants"] = graph.includes_constants;
    ordered_json vertices = ordered_json::array();
    for (std::uint64_t v : graph.vertices) vertices.push_back("#" + std::to_string(v));
    j["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (const auto& e : graph.edges) {
        edges.push_back(ordered_json{{"u", "#" + std::to_string(e.u)},
                                     {"v", "#" + std::to_string(e.v)},
                                     {"basis_index", e.basis_index}});
    }
    j["edges"] = std::move(edges);
    return j;
}

} // namespace ffchain
