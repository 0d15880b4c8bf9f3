#pragma once

#include <optional>
#include <vector>

#include "vlo/graph.hpp"

namespace vlo {

enum class QueryPhase {
    Unreachable,
    SelfLabel,
    ClusterShortcut,
    Phase1,
    Phase2,
    Phase3,
};

const char* phaseName(QueryPhase p);

/// Answer to a vertex-label query. When a path is present it is a valid walk
/// in the graph from the queried vertex to a vertex of the queried label,
/// with edge weights summing to `distance`.
struct QueryResult {
    Dist distance = kInfDist;
    std::optional<std::vector<Vertex>> path;
    QueryPhase phase = QueryPhase::Unreachable;
    int level = -1;  // winning level index where applicable
    int probes = 0;  // hash-table lookups performed
};

}  // namespace vlo
