#include "ffchain/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace ffchain {

namespace {

const char* edge_color(unsigned basis_index) {
    switch ((basis_index - 1) % 3) {
        case 0: return "blue";
        case 1: return "red";
        default: return "darkgreen";
    }
}

const char* edge_style(unsigned basis_index) {
    switch ((basis_index - 1) % 3) {
        case 0: return "solid";
        case 1: return "dashed";
        default: return "dotted";
    }
}

void append_matching_edges(MatchingGraph& graph, const IrreduciblePoly& f, unsigned basis_index,
                           std::uint64_t guard) {
    const std::uint32_t p = f.characteristic();
    const std::uint64_t q = field_order(p, f.degree());
    const std::vector<std::uint64_t> table = inverse_table(f, guard);
    const std::uint64_t lo = graph.includes_constants ? 1 : p;
    for (std::uint64_t u = lo; u < q; ++u) {
        const std::uint64_t v = table[u];
        if (v < u) continue; // undirected edge already recorded from the other end
        graph.edges.push_back({u, v, basis_index});
    }
}

} // namespace

MatchingGraph build_matching(const IrreduciblePoly& f, bool include_constants,
                             std::uint64_t guard) {
    const std::uint32_t p = f.characteristic();
    const std::uint64_t q = field_order(p, f.degree());
    MatchingGraph graph;
    graph.p = p;
    graph.n = f.degree();
    graph.includes_constants = include_constants;
    for (std::uint64_t i = include_constants ? 1 : p; i < q; ++i) graph.vertices.push_back(i);
    append_matching_edges(graph, f, 1, guard);
    return graph;
}

MatchingGraph matching_union(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                             bool include_constants, std::uint64_t guard) {
    if (f1.characteristic() != f2.characteristic() || f1.degree() != f2.degree())
        throw std::invalid_argument("matching_union: bases must share characteristic and degree");
    MatchingGraph graph = build_matching(f1, include_constants, guard);
    append_matching_edges(graph, f2, 2, guard);
    std::sort(graph.edges.begin(), graph.edges.end(), [](const auto& a, const auto& b) {
        return std::tie(a.basis_index, a.u, a.v) < std::tie(b.basis_index, b.u, b.v);
    });
    return graph;
}

std::string export_dot(const MatchingGraph& graph, std::string_view name) {
    const Prime p(graph.p);
    std::string out = "graph " + std::string(name) + " {\n";
    out += "  node [shape=circle];\n";
    for (std::uint64_t v : graph.vertices) {
        out += "  \"" + digit_label(Poly::from_index(p, v), graph.n) + "\" [tooltip=\"#" +
               std::to_string(v) + "\"];\n";
    }
    for (const auto& e : graph.edges) {
        out += "  \"" + digit_label(Poly::from_index(p, e.u), graph.n) + "\" -- \"" +
               digit_label(Poly::from_index(p, e.v), graph.n) + "\" [color=" +
               edge_color(e.basis_index) + ", style=" + edge_style(e.basis_index) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string export_dot(const ClosedLoop& loop, std::string_view name) {
    const Prime p(loop.schedule.characteristic());
    const unsigned n = loop.schedule.degree();
    const std::size_t beta = loop.schedule.beta();

    std::vector<std::uint64_t> vertices;
    for (std::size_t i = 0; i + 1 < loop.elements.size(); ++i)
        vertices.push_back(loop.elements[i].index());
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    std::string out = "digraph " + std::string(name) + " {\n";
    out += "  node [shape=circle];\n";
    for (std::uint64_t v : vertices) {
        out += "  \"" + digit_label(Poly::from_index(p, v), n) + "\" [tooltip=\"#" +
               std::to_string(v) + "\"];\n";
    }
    for (std::size_t i = 0; i + 1 < loop.elements.size(); ++i) {
        const unsigned basis_index = static_cast<unsigned>(i % beta) + 1;
        out += "  \"" + digit_label(loop.elements[i], n) + "\" -> \"" +
               digit_label(loop.elements[i + 1], n) + "\" [color=" + edge_color(basis_index) +
               ", style=" + edge_style(basis_index) + "];\n";
    }
    out += "}\n";
    return out;
}

} // namespace ffchain
