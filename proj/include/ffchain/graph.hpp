#ifndef FFCHAIN_GRAPH_HPP
#define FFCHAIN_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffchain/chain.hpp"
#include "ffchain/field.hpp"

namespace ffchain {

/// Undirected inverse graph of one or two bases. Restricted to the elements
/// outside {0, 1, p-1}, each single basis contributes a perfect matching;
/// with constants included, 1 and p-1 carry self-loops.
struct MatchingGraph {
    struct Edge {
        std::uint64_t u, v;   // u <= v; u == v marks a self-loop
        unsigned basis_index; // 1-based position in the originating pair
    };
    std::uint32_t p = 2;
    unsigned n = 0;
    bool includes_constants = false;
    std::vector<std::uint64_t> vertices; // ascending
    std::vector<Edge> edges;             // sorted by (basis_index, u, v)
};

MatchingGraph build_matching(const IrreduciblePoly& f, bool include_constants = false,
                             std::uint64_t guard = kDefaultGuard);
/// Union of the two matchings; edges tagged basis_index 1 and 2.
MatchingGraph matching_union(const IrreduciblePoly& f1, const IrreduciblePoly& f2,
                             bool include_constants = false,
                             std::uint64_t guard = kDefaultGuard);

// DOT text, byte-stable for identical inputs. Vertices ascend by index and are
// labeled with their digit strings; edge style follows the basis index
// (1 solid blue, 2 dashed red, 3 dotted green). Closed loops render directed,
// one edge per chain step.
std::string export_dot(const MatchingGraph& graph, std::string_view name = "inverse_matching");
std::string export_dot(const ClosedLoop& loop, std::string_view name = "closed_loop");

} // namespace ffchain

#endif // FFCHAIN_GRAPH_HPP
