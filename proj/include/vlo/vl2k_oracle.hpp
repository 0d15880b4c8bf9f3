#pragma once

#include <cstdint>

#include "vlo/graph.hpp"
#include "vlo/hierarchy.hpp"
#include "vlo/pairwise.hpp"
#include "vlo/query.hpp"

namespace vlo {

/// Vertex-label distance oracle with two-sided testing: besides testing the
/// source's pivots against the label bunch, it scans the source's bunch
/// against the per-label pivot tables, and resolves the rest through the
/// exact last-level label table. Returned distances are within a factor
/// 2k-1 of dist(v, V_l); with k=1 they are exact. Path reporting is an
/// optional extension that additionally stores cluster trees and the
/// pairwise oracle.
struct TwoSidedOracle {
    const LabeledGraph* graph = nullptr;

    Hierarchy hierarchy;
    PivotTable pivots;
    BunchSet bunches;
    LabelBunch labelBunch;
    PivotLabelTables pivotTables;
    LastLevelLabelDist lastLevel;

    bool pathReporting = false;
    ClusterForest clusters;      // only when pathReporting
    PairSet pairs;               // only when pathReporting
    PairwisePathOracle pairwise; // only when pathReporting

    static TwoSidedOracle build(const LabeledGraph& g, int k,
                                std::uint64_t seed, bool pathReporting = false);

    QueryResult query(Vertex v, Label l) const;
    QueryResult queryPath(Vertex v, Label l) const;

    int kEffective() const { return hierarchy.kEffective; }

private:
    struct Selection;
    Selection select(Vertex v, Label l) const;
};

}  // namespace vlo
