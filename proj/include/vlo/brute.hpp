#pragma once

#include <vector>

#include "vlo/graph.hpp"
#include "vlo/hierarchy.hpp"

namespace vlo {

/// Definitional recomputation of every preprocessing structure from an
/// all-pairs distance matrix. Deliberately independent of the pruned-Dijkstra
/// pipeline; used to certify it on small instances.

using DistMatrix = std::vector<std::vector<Dist>>;

DistMatrix floydWarshall(const LabeledGraph& g);

PivotTable brutePivots(const LabeledGraph& g, const Hierarchy& h,
                       const DistMatrix& d);
BunchSet bruteBunches(const LabeledGraph& g, const Hierarchy& h,
                      const DistMatrix& d);
// Cluster membership per root (paired with exact distances), roots ordered
// by id over vertices outside the last level.
struct BruteClusters {
    std::vector<Vertex> roots;
    std::vector<std::vector<BunchEntry>> members;  // sorted by vertex id
};
BruteClusters bruteClusters(const LabeledGraph& g, const Hierarchy& h,
                            const DistMatrix& d);
LabelBunch bruteLabelBunches(const LabeledGraph& g, const Hierarchy& h,
                             const DistMatrix& d);
PivotLabelTables brutePivotLabelTables(const LabeledGraph& g,
                                       const Hierarchy& h,
                                       const DistMatrix& d);
LastLevelLabelDist bruteLastLevelLabelDistances(const LabeledGraph& g,
                                                const Hierarchy& h,
                                                const DistMatrix& d);

}  // namespace vlo
