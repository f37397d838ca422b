#include <doctest.h>

#include <map>
#include <string>

#include "ffchain/graph.hpp"
#include "ffchain/serialize.hpp"

using namespace ffchain;

namespace {

const Prime kTwo(2);

IrreduciblePoly F(std::uint64_t index, std::uint32_t p = 2) {
    return IrreduciblePoly(Poly::from_index(Prime(p), index));
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

} // namespace

TEST_CASE("build_matching reproduces the figure-1 edge sets") {
    const MatchingGraph blue = build_matching(F(11));
    REQUIRE(blue.edges.size() == 3);
    CHECK(blue.vertices == std::vector<std::uint64_t>{2, 3, 4, 5, 6, 7});
    CHECK(blue.edges[0].u == 2); CHECK(blue.edges[0].v == 5);  // 010-101
    CHECK(blue.edges[1].u == 3); CHECK(blue.edges[1].v == 6);  // 011-110
    CHECK(blue.edges[2].u == 4); CHECK(blue.edges[2].v == 7);  // 100-111

    const MatchingGraph red = build_matching(F(13));
    REQUIRE(red.edges.size() == 3);
    CHECK(red.edges[0].u == 2); CHECK(red.edges[0].v == 6);  // 010-110
    CHECK(red.edges[1].u == 3); CHECK(red.edges[1].v == 4);  // 011-100
    CHECK(red.edges[2].u == 5); CHECK(red.edges[2].v == 7);  // 101-111
}

TEST_CASE("constants add self-loops at 1 and p-1 only") {
    const MatchingGraph with_consts = build_matching(F(11), true);
    CHECK(with_consts.vertices.front() == 1);
    std::size_t self_loops = 0;
    for (const auto& e : with_consts.edges) {
        if (e.u == e.v) {
            ++self_loops;
            CHECK(e.u == 1); // p = 2: only 1 is its own scalar inverse
        }
    }
    CHECK(self_loops == 1);

    const Prime three(3);
    const auto irr = enumerate_irreducibles(three, 2);
    const MatchingGraph g3 = build_matching(irr[0], true);
    std::size_t loops3 = 0;
    for (const auto& e : g3.edges) {
        if (e.u == e.v) {
            ++loops3;
            CHECK((e.u == 1 || e.u == 2)); // 1 and p-1
        }
    }
    CHECK(loops3 == 2);
}

TEST_CASE("each single-basis matching is perfect on the non-constants") {
    for (unsigned n = 2; n <= 6; ++n) {
        for (const auto& f : enumerate_irreducibles(kTwo, n)) {
            const MatchingGraph g = build_matching(f);
            std::map<std::uint64_t, int> degree;
            for (const auto& e : g.edges) {
                degree[e.u] += 1;
                degree[e.v] += 1;
            }
            CHECK(degree.size() == g.vertices.size());
            for (const auto& [v, d] : degree) CHECK(d == 1);
        }
    }
}

TEST_CASE("a union of two distinct matchings is 2-regular") {
    for (unsigned n = 3; n <= 5; ++n) {
        const auto irr = enumerate_irreducibles(kTwo, n);
        for (std::size_t i = 0; i < irr.size(); ++i) {
            for (std::size_t j = i + 1; j < irr.size(); ++j) {
                const MatchingGraph g = matching_union(irr[i], irr[j]);
                std::map<std::uint64_t, int> degree;
                for (const auto& e : g.edges) {
                    degree[e.u] += 1;
                    degree[e.v] += 1;
                }
                for (const auto& [v, d] : degree) CHECK(d == 2);
            }
        }
    }
    CHECK_THROWS_AS(matching_union(F(11), F(19)), std::invalid_argument);
}

TEST_CASE("figure-1 union DOT:6 nodes, 3 solid blue + 3 dashed red edges") {
    const MatchingGraph g = matching_union(F(11), F(13));
    const std::string dot = export_dot(g);
    CHECK(count_occurrences(dot, "[tooltip=") == 6);
    CHECK(count_occurrences(dot, "style=solid") == 3);
    CHECK(count_occurrences(dot, "style=dashed") == 3);
    CHECK(count_occurrences(dot, "color=blue") == 3);
    CHECK(count_occurrences(dot, "color=red") == 3);
    CHECK(dot.find("\"111\" [tooltip=\"#7\"]") != std::string::npos);
    CHECK(dot.find("\"010\" -- \"101\"") != std::string::npos);
    CHECK(dot.find("\"011\" -- \"100\"") != std::string::npos);

    // byte-identical across runs
    CHECK(export_dot(matching_union(F(11), F(13))) == dot);
}

TEST_CASE("empty graph still renders valid DOT") {
    const MatchingGraph empty;
    const std::string dot = export_dot(empty);
    CHECK(dot == "graph inverse_matching {\n  node [shape=circle];\n}\n");
}

TEST_CASE("closed-loop DOT uses the computed walk") {
    // The paper draws this loop with 10 nodes and 15 edges, but the drawing is
    // not realizable in F_16; the computed loop visits 14 nodes over 24 steps.
    const BasisSchedule triple({F(19), F(25), F(31)});
    const ClosedLoop loop = find_closed_loop(parse_poly("x^2+x+1", kTwo), triple);
    const std::string dot = export_dot(loop);
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(count_occurrences(dot, "[tooltip=") == 14);
    CHECK(count_occurrences(dot, " -> ") == 24);
    CHECK(count_occurrences(dot, "style=solid") == 8);
    CHECK(count_occurrences(dot, "style=dashed") == 8);
    CHECK(count_occurrences(dot, "style=dotted") == 8);
    CHECK(export_dot(find_closed_loop(parse_poly("x^2+x+1", kTwo), triple)) == dot);
}

TEST_CASE("matching JSON mirrors the edge list") {
    const auto j = to_json(matching_union(F(11), F(13)));
    CHECK(j["p"] == 2);
    CHECK(j["n"] == 3);
    REQUIRE(j["edges"].size() == 6);
    CHECK(j["edges"][0]["u"] == "#2");
    CHECK(j["edges"][0]["v"] == "#5");
    CHECK(j["edges"][0]["basis_index"] == 1);
    CHECK(j["edges"][5]["basis_index"] == 2);
    CHECK(j["vertices"].size() == 6);
}
