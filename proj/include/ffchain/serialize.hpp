#ifndef FFCHAIN_SERIALIZE_HPP
#define FFCHAIN_SERIALIZE_HPP

#include <json.hpp>

#include "ffchain/chain.hpp"
#include "ffchain/graph.hpp"

namespace ffchain {

// Stable JSON shapes; polynomials appear in indexed form ("#11").
nlohmann::ordered_json to_json(const Chain& chain);
nlohmann::ordered_json to_json(const CyclePartition& part);
nlohmann::ordered_json to_json(const Permutation& sigma);
nlohmann::ordered_json to_json(const ClosedLoop& loop);
nlohmann::ordered_json to_json(const LoopEnumeration& loops);
nlohmann::ordered_json to_json(const MatchingGraph& graph);

} // namespace ffchain

#endif // FFCHAIN_SERIALIZE_HPP
