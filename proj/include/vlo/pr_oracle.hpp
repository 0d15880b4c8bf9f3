#pragma once

#include <cstdint>

#include "vlo/graph.hpp"
#include "vlo/hierarchy.hpp"
#include "vlo/pairwise.hpp"
#include "vlo/query.hpp"

namespace vlo {

/// Path-reporting vertex-label distance oracle. Queries test the pivots of
/// the source against the label bunch (plus an optional exact label-cluster
/// shortcut) and fall back to the pairwise oracle through the top-level
/// pivot. With the exact pairwise backend the returned distance is within a
/// factor 4k-5 of dist(v, V_l) (4k-3 with the shortcut disabled).
struct PathReportingOracle {
    const LabeledGraph* graph = nullptr;

    Hierarchy hierarchy;
    PivotTable pivots;
    BunchSet bunches;
    ClusterForest clusters;
    LabelBunch labelBunch;
    LastLevelLabelDist lastLevel;
    PairSet pairs;
    PairwisePathOracle pairwise;
    bool useClusterShortcut = true;

    static PathReportingOracle build(const LabeledGraph& g, int k,
                                     std::uint64_t seed,
                                     bool useClusterShortcut = true);

    QueryResult queryDistance(Vertex v, Label l) const;
    QueryResult queryPath(Vertex v, Label l) const;

    int kEffective() const { return hierarchy.kEffective; }

private:
    struct Selection;
    Selection select(Vertex v, Label l) const;
};

}  // namespace vlo
