#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "vlo/dijkstra.hpp"
#include "vlo/graph.hpp"

namespace vlo {

/// Nested vertex samples A_0 ⊇ A_1 ⊇ ... ⊇ A_{kEffective-1}, each level
/// keeping a vertex of the previous one independently with probability
/// l^{-1/kRequested}. If some level comes out empty, kEffective truncates
/// to the first empty index.
struct Hierarchy {
    int kRequested = 0;
    int kEffective = 0;
    double sampleProb = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::vector<Vertex>> levels;  // sorted vertex ids
    std::vector<int> levelOf;                 // max i with v in levels[i]

    bool inLevel(Vertex v, int i) const { return levelOf[v] >= i; }
    bool inLastLevel(Vertex v) const { return levelOf[v] == kEffective - 1; }
};

/// Per-vertex pivots: pivotOf(v,i) is the nearest vertex of A_i (smaller id
/// on ties), fixed top-down so that equal level distances share one pivot.
struct PivotTable {
    int k = 0;
    Vertex n = 0;
    std::vector<Vertex> pivot;    // n*k, kNoVertex if level unreachable
    std::vector<Dist> pivotDist;  // n*k, == dist(v, A_i)

    Vertex pivotOf(Vertex v, int i) const { return pivot[v * k + i]; }
    Dist distToLevel(Vertex v, int i) const {
        return i >= k ? kInfDist : pivotDist[v * k + i];
    }
};

struct BunchEntry {
    Vertex vertex;
    Dist dist;
};

/// B~(v): vertices u at levels 0..k-2 with dist(v,u) < dist(v, A_{level(u)+1}),
/// each with its exact distance. Sorted by vertex id.
struct BunchSet {
    std::vector<std::vector<BunchEntry>> bunch;

    bool contains(Vertex v, Vertex u) const;
    Dist distTo(Vertex v, Vertex u) const;  // kInfDist if absent
    std::size_t totalEntries() const;
};

struct Witness {
    Vertex vertex = kNoVertex;
    Dist dist = kInfDist;
};

/// Per label l: hash table over B~(l) = union of B~(x) for x of label l,
/// each entry u mapped to the nearest witness x with u in B~(x).
struct LabelBunch {
    std::vector<std::unordered_map<Vertex, Witness>> table;

    std::size_t totalEntries() const;
};

/// Clusters C(u) with shortest-path trees T(u) for every u outside the last
/// level, plus per-label cluster tables C(l) over level-0 vertices of label l.
struct ClusterForest {
    std::vector<ClusterTree> trees;        // ordered by root id
    std::vector<std::int64_t> treeIndex;   // per vertex, -1 if no tree
    std::vector<std::unordered_map<Vertex, Witness>> labelCluster;

    const ClusterTree* treeOf(Vertex u) const {
        return treeIndex[u] < 0 ? nullptr : &trees[treeIndex[u]];
    }
    std::size_t totalClusterEntries() const;
    std::size_t totalLabelClusterEntries() const;
};

/// P_i(l): level-i pivots of vertices labeled l, with nearest witnesses.
/// Indexed [i][l] for 0 <= i <= k-2.
struct PivotLabelTables {
    std::vector<std::vector<std::unordered_map<Vertex, Witness>>> table;

    std::size_t totalEntries() const;
};

/// For every vertex of the last level: nearest vertex of each label and the
/// exact distance (absent witness if the label is unreachable).
struct LastLevelLabelDist {
    std::unordered_map<Vertex, std::vector<Witness>> table;

    const Witness* lookup(Vertex u, Label l) const;
    std::size_t finiteEntries() const;
};

/// The pair universe served by the pairwise oracle: every vertex with its
/// top pivot, and every last-level vertex with its nearest vertex of each
/// label. Unordered, deduplicated, infinite-distance pairs omitted.
struct PairSet {
    struct Pair {
        Vertex a, b;  // a <= b
        Dist dist;
    };
    std::vector<Pair> pairs;  // sorted by (a,b)

    // Construction-bound counts (before dedup / unreachable omission);
    // n + |A_{k-1}|*l is the quantity the size analysis tracks.
    std::size_t pivotFamilyCount = 0;
    std::size_t labelFamilyCount = 0;
    std::size_t familyCountBound = 0;

    bool containsPair(Vertex a, Vertex b) const;
};

Hierarchy sampleHierarchy(const LabeledGraph& g, int k, std::uint64_t seed);
PivotTable computePivots(const LabeledGraph& g, const Hierarchy& h);
BunchSet computeBunches(const LabeledGraph& g, const Hierarchy& h,
                        const PivotTable& p);
ClusterForest computeClusters(const LabeledGraph& g, const Hierarchy& h,
                              const PivotTable& p);
LabelBunch buildLabelBunches(const BunchSet& b, const LabeledGraph& g);
PivotLabelTables buildPivotLabelTables(const PivotTable& p,
                                       const LabeledGraph& g,
                                       const Hierarchy& h);
LastLevelLabelDist computeLastLevelLabelDistances(const LabeledGraph& g,
                                                  const Hierarchy& h);
PairSet buildPairSet(const LabeledGraph& g, const Hierarchy& h,
                     const PivotTable& p, const LastLevelLabelDist& d);

}  // namespace vlo
