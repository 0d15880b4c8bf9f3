#include "vlo/vl2k_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlo {

namespace {

std::vector<Vertex> treeDetourPath(const ClusterTree& t, Vertex v, Vertex x) {
    std::vector<Vertex> up = t.pathFromRoot(v);
    std::reverse(up.begin(), up.end());
    std::vector<Vertex> down = t.pathFromRoot(x);
    up.insert(up.end(), down.begin() + 1, down.end());
    return up;
}

}  // namespace

TwoSidedOracle TwoSidedOracle::build(const LabeledGraph& g, int k,
                                     std::uint64_t seed, bool pathReporting) {
    if (k < 1) throw std::invalid_argument("oracle requires k >= 1");
    if (g.numVertices() == 0) throw std::invalid_argument("empty graph");

    TwoSidedOracle o;
    o.graph = &g;
    o.pathReporting = pathReporting;
    o.hierarchy = sampleHierarchy(g, k, seed);
    o.pivots = computePivots(g, o.hierarchy);
    o.bunches = computeBunches(g, o.hierarchy, o.pivots);
    o.labelBunch = buildLabelBunches(o.bunches, g);
    o.pivotTables = buildPivotLabelTables(o.pivots, g, o.hierarchy);
    o.lastLevel = computeLastLevelLabelDistances(g, o.hierarchy);
    if (pathReporting) {
        o.clusters = computeClusters(g, o.hierarchy, o.pivots);
        o.pairs = buildPairSet(g, o.hierarchy, o.pivots, o.lastLevel);
        o.pairwise = buildExactPairwise(g, o.pairs);
    }
    return o;
}

struct TwoSidedOracle::Selection {
    QueryPhase phase = QueryPhase::Unreachable;
    Dist distance = kInfDist;
    int level = -1;
    int probes = 0;
    Vertex phase1Pivot = kNoVertex;   // Phase1
    Vertex phase1Target = kNoVertex;  // Phase1
    Vertex phase2Hub = kNoVertex;     // Phase2: bunch vertex v_j
    Vertex phase2Target = kNoVertex;  // Phase2: witness y_j
    Vertex topPivot = kNoVertex;      // Phase3
    Vertex topTarget = kNoVertex;     // Phase3
};

TwoSidedOracle::Selection TwoSidedOracle::select(Vertex v, Label l) const {
    const LabeledGraph& g = *graph;
    if (v >= g.numVertices()) throw std::invalid_argument("vertex id out of range");
    if (l >= g.numLabels()) throw std::invalid_argument("label id out of range");

    Selection s;
    if (g.labelOf(v) == l) {
        s.phase = QueryPhase::SelfLabel;
        s.distance = 0;
        return s;
    }
    if (g.verticesWithLabel(l).empty()) return s;

    const int k = hierarchy.kEffective;

    // Best D (phases 1 and 3, smaller index wins ties) and best E (phase 2).
    Dist bestD = kInfDist;
    for (int i = 0; i <= k - 2; ++i) {
        const Vertex pv = pivots.pivotOf(v, i);
        if (pv == kNoVertex) continue;
        ++s.probes;
        auto it = labelBunch.table[l].find(pv);
        if (it == labelBunch.table[l].end()) continue;
        const Dist di = pivots.distToLevel(v, i) + it->second.dist;
        if (di < bestD) {
            bestD = di;
            s.phase = QueryPhase::Phase1;
            s.level = i;
            s.phase1Pivot = pv;
            s.phase1Target = it->second.vertex;
        }
    }

    Dist bestE = kInfDist;
    Vertex bestHub = kNoVertex, bestTarget = kNoVertex;
    int bestHubLevel = -1;
    for (const BunchEntry& e : bunches.bunch[v]) {
        const int i = hierarchy.levelOf[e.vertex];
        ++s.probes;
        auto it = pivotTables.table[i][l].find(e.vertex);
        if (it == pivotTables.table[i][l].end()) continue;
        const Dist ej = e.dist + it->second.dist;
        if (ej < bestE) {  // bunch iterated by ascending id, ties keep first
            bestE = ej;
            bestHub = e.vertex;
            bestTarget = it->second.vertex;
            bestHubLevel = i;
        }
    }

    const Vertex top = pivots.pivotOf(v, k - 1);
    if (top != kNoVertex) {
        ++s.probes;
        if (const Witness* w = lastLevel.lookup(top, l)) {
            const Dist dk = pivots.distToLevel(v, k - 1) + w->dist;
            if (dk < bestD) {
                bestD = dk;
                s.phase = QueryPhase::Phase3;
                s.level = k - 1;
                s.topPivot = top;
                s.topTarget = w->vertex;
            }
        }
    }

    // D wins ties against E.
    if (bestE < bestD) {
        s.phase = QueryPhase::Phase2;
        s.distance = bestE;
        s.level = bestHubLevel;
        s.phase2Hub = bestHub;
        s.phase2Target = bestTarget;
    } else if (bestD < kInfDist) {
        s.distance = bestD;
    } else {
        s.phase = QueryPhase::Unreachable;
        s.level = -1;
    }
    return s;
}

QueryResult TwoSidedOracle::query(Vertex v, Label l) const {
    Selection s = select(v, l);
    QueryResult r;
    r.distance = s.distance;
    r.phase = s.phase;
    r.level = s.level;
    r.probes = s.probes;
    return r;
}

QueryResult TwoSidedOracle::queryPath(Vertex v, Label l) const {
    if (!pathReporting)
        throw std::runtime_error(
            "oracle was built without path reporting");
    Selection s = select(v, l);
    QueryResult r;
    r.distance = s.distance;
    r.phase = s.phase;
    r.level = s.level;
    r.probes = s.probes;

    switch (s.phase) {
        case QueryPhase::Unreachable:
        case QueryPhase::ClusterShortcut:
            break;
        case QueryPhase::SelfLabel:
            r.path = std::vector<Vertex>{v};
            break;
        case QueryPhase::Phase1:
            r.path = treeDetourPath(*clusters.treeOf(s.phase1Pivot), v,
                                    s.phase1Target);
            break;
        case QueryPhase::Phase2:
            r.path = treeDetourPath(*clusters.treeOf(s.phase2Hub), v,
                                    s.phase2Target);
            break;
        case QueryPhase::Phase3: {
            auto leg1 = pairwise.query(v, s.topPivot);
            auto leg2 = pairwise.query(s.topPivot, s.topTarget);
            r.probes += 2;
            std::vector<Vertex> p = std::move(leg1.path);
            p.insert(p.end(), leg2.path.begin() + 1, leg2.path.end());
            r.path = std::move(p);
            break;
        }
    }
    return r;
}

}  // namespace vlo
