#include "vlo/pr_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace vlo {

const char* phaseName(QueryPhase p) {
    switch (p) {
        case QueryPhase::Unreachable: return "unreachable";
        case QueryPhase::SelfLabel: return "self";
        case QueryPhase::ClusterShortcut: return "cluster-shortcut";
        case QueryPhase::Phase1: return "phase1";
        case QueryPhase::Phase2: return "phase2";
        case QueryPhase::Phase3: return "phase3";
    }
    return "?";
}

namespace {

// Walk v -> root -> x inside one cluster tree.
std::vector<Vertex> treeDetourPath(const ClusterTree& t, Vertex v, Vertex x) {
    std::vector<Vertex> up = t.pathFromRoot(v);  // root..v
    std::reverse(up.begin(), up.end());          // v..root
    std::vector<Vertex> down = t.pathFromRoot(x);  // root..x
    up.insert(up.end(), down.begin() + 1, down.end());
    return up;
}

}  // namespace

PathReportingOracle PathReportingOracle::build(const LabeledGraph& g, int k,
                                               std::uint64_t seed,
                                               bool useClusterShortcut) {
    if (k < 2)
        throw std::invalid_argument(
            "path-reporting oracle requires k >= 2");
    if (g.numVertices() == 0)
        throw std::invalid_argument("empty graph");

    PathReportingOracle o;
    o.graph = &g;
    o.useClusterShortcut = useClusterShortcut;
    o.hierarchy = sampleHierarchy(g, k, seed);
    o.pivots = computePivots(g, o.hierarchy);
    o.bunches = computeBunches(g, o.hierarchy, o.pivots);
    o.clusters = computeClusters(g, o.hierarchy, o.pivots);
    o.labelBunch = buildLabelBunches(o.bunches, g);
    o.lastLevel = computeLastLevelLabelDistances(g, o.hierarchy);
    o.pairs = buildPairSet(g, o.hierarchy, o.pivots, o.lastLevel);
    o.pairwise = buildExactPairwise(g, o.pairs);
    return o;
}

struct PathReportingOracle::Selection {
    QueryPhase phase = QueryPhase::Unreachable;
    Dist distance = kInfDist;
    int level = -1;
    int probes = 0;
    // Path-reconstruction data, depending on phase:
    Vertex shortcutWitness = kNoVertex;  // ClusterShortcut
    Vertex phase1Pivot = kNoVertex;      // Phase1
    Vertex phase1Target = kNoVertex;     // Phase1
    Vertex topPivot = kNoVertex;         // Phase2
    Vertex topTarget = kNoVertex;        // Phase2
};

PathReportingOracle::Selection PathReportingOracle::select(Vertex v,
                                                           Label l) const {
    const LabeledGraph& g = *graph;
    if (v >= g.numVertices()) throw std::invalid_argument("vertex id out of range");
    if (l >= g.numLabels()) throw std::invalid_argument("label id out of range");

    Selection s;
    if (g.labelOf(v) == l) {
        s.phase = QueryPhase::SelfLabel;
        s.distance = 0;
        return s;
    }
    if (g.verticesWithLabel(l).empty()) return s;  // unreachable, no probes

    const int k = hierarchy.kEffective;

    if (useClusterShortcut) {
        ++s.probes;
        auto it = clusters.labelCluster[l].find(v);
        if (it != clusters.labelCluster[l].end()) {
            s.phase = QueryPhase::ClusterShortcut;
            s.distance = it->second.dist;
            s.shortcutWitness = it->second.vertex;
            return s;
        }
    }

    // Phase 1: one-sided tests of v's pivots against the label bunch.
    // Ties at the minimum keep the smallest level.
    for (int i = 0; i <= k - 2; ++i) {
        const Vertex pv = pivots.pivotOf(v, i);
        if (pv == kNoVertex) continue;
        ++s.probes;
        auto it = labelBunch.table[l].find(pv);
        if (it == labelBunch.table[l].end()) continue;
        const Dist di = pivots.distToLevel(v, i) + it->second.dist;
        if (di < s.distance) {
            s.phase = QueryPhase::Phase1;
            s.distance = di;
            s.level = i;
            s.phase1Pivot = pv;
            s.phase1Target = it->second.vertex;
        }
    }

    // Phase 2: through the top-level pivot and the pairwise oracle.
    const Vertex top = pivots.pivotOf(v, k - 1);
    if (top != kNoVertex) {
        ++s.probes;
        if (const Witness* w = lastLevel.lookup(top, l)) {
            ++s.probes;
            const Dist dk =
                pivots.distToLevel(v, k - 1) + pairwise.lengthOf(top, w->vertex);
            if (dk < s.distance) {
                s.phase = QueryPhase::Phase2;
                s.distance = dk;
                s.level = k - 1;
                s.topPivot = top;
                s.topTarget = w->vertex;
            }
        }
    }
    return s;
}

QueryResult PathReportingOracle::queryDistance(Vertex v, Label l) const {
    Selection s = select(v, l);
    QueryResult r;
    r.distance = s.distance;
    r.phase = s.phase;
    r.level = s.level;
    r.probes = s.probes;
    return r;
}

QueryResult PathReportingOracle::queryPath(Vertex v, Label l) const {
    Selection s = select(v, l);
    QueryResult r;
    r.distance = s.distance;
    r.phase = s.phase;
    r.level = s.level;
    r.probes = s.probes;

    switch (s.phase) {
        case QueryPhase::Unreachable:
            break;
        case QueryPhase::SelfLabel:
            r.path = std::vector<Vertex>{v};
            break;
        case QueryPhase::ClusterShortcut: {
            const ClusterTree* t = clusters.treeOf(s.shortcutWitness);
            auto p = t->pathFromRoot(v);  // witness..v
            std::reverse(p.begin(), p.end());
            r.path = std::move(p);
            break;
        }
        case QueryPhase::Phase1: {
            const ClusterTree* t = clusters.treeOf(s.phase1Pivot);
            r.path = treeDetourPath(*t, v, s.phase1Target);
            break;
        }
        case QueryPhase::Phase2: {
            auto leg1 = pairwise.query(v, s.topPivot);
            auto leg2 = pairwise.query(s.topPivot, s.topTarget);
            r.probes += 2;
            std::vector<Vertex> p = std::move(leg1.path);
            p.insert(p.end(), leg2.path.begin() + 1, leg2.path.end());
            r.path = std::move(p);
            break;
        }
        case QueryPhase::Phase3:
            break;  // not produced by this oracle
    }
    return r;
}

}  // namespace vlo
