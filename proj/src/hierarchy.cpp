#include "vlo/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace vlo {

namespace {

bool betterWitness(Dist d, Vertex v, const Witness& cur) {
    return d < cur.dist || (d == cur.dist && v < cur.vertex);
}

void offerWitness(std::unordered_map<Vertex, Witness>& table, Vertex key,
                  Dist d, Vertex witness) {
    auto [it, inserted] = table.try_emplace(key, Witness{witness, d});
    if (!inserted && betterWitness(d, witness, it->second))
        it->second = Witness{witness, d};
}

}  // namespace

bool BunchSet::contains(Vertex v, Vertex u) const {
    return distTo(v, u) < kInfDist;
}

Dist BunchSet::distTo(Vertex v, Vertex u) const {
    const auto& b = bunch[v];
    auto it = std::lower_bound(
        b.begin(), b.end(), u,
        [](const BunchEntry& e, Vertex x) { return e.vertex < x; });
    if (it != b.end() && it->vertex == u) return it->dist;
    return kInfDist;
}

std::size_t BunchSet::totalEntries() const {
    std::size_t s = 0;
    for (const auto& b : bunch) s += b.size();
    return s;
}

std::size_t LabelBunch::totalEntries() const {
    std::size_t s = 0;
    for (const auto& t : table) s += t.size();
    return s;
}

std::size_t ClusterForest::totalClusterEntries() const {
    std::size_t s = 0;
    for (const auto& t : trees) s += t.size();
    return s;
}

std::size_t ClusterForest::totalLabelClusterEntries() const {
    std::size_t s = 0;
    for (const auto& t : labelCluster) s += t.size();
    return s;
}

std::size_t PivotLabelTables::totalEntries() const {
    std::size_t s = 0;
    for (const auto& perLevel : table)
        for (const auto& t : perLevel) s += t.size();
    return s;
}

const Witness* LastLevelLabelDist::lookup(Vertex u, Label l) const {
    auto it = table.find(u);
    if (it == table.end()) return nullptr;
    const Witness& w = it->second[l];
    return w.vertex == kNoVertex ? nullptr : &w;
}

std::size_t LastLevelLabelDist::finiteEntries() const {
    std::size_t s = 0;
    for (const auto& [u, row] : table)
        for (const auto& w : row)
            if (w.vertex != kNoVertex) ++s;
    return s;
}

bool PairSet::containsPair(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(a, b),
                               [](const Pair& p, const std::pair<Vertex, Vertex>& q) {
                                   return std::tie(p.a, p.b) < std::tie(q.first, q.second);
                               });
    return it != pairs.end() && it->a == a && it->b == b;
}

Hierarchy sampleHierarchy(const LabeledGraph& g, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("hierarchy parameter k must be >= 1");
    const Vertex n = g.numVertices();
    const double q = std::pow(static_cast<double>(g.numLabels()), -1.0 / k);

    Hierarchy h;
    h.kRequested = k;
    h.sampleProb = q;
    h.seed = seed;

    h.levels.emplace_back();
    h.levels[0].resize(n);
    for (Vertex v = 0; v < n; ++v) h.levels[0][v] = v;

    std::mt19937_64 rng(seed);
    for (int i = 1; i <= k - 1; ++i) {
        std::vector<Vertex> next;
        for (Vertex v : h.levels[i - 1]) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (u < q) next.push_back(v);
        }
        if (next.empty()) break;  // truncate at the first empty level
        h.levels.push_back(std::move(next));
    }

    h.kEffective = static_cast<int>(h.levels.size());
    h.levelOf.assign(n, 0);
    for (int i = 1; i < h.kEffective; ++i)
        for (Vertex v : h.levels[i]) h.levelOf[v] = i;
    return h;
}

PivotTable computePivots(const LabeledGraph& g, const Hierarchy& h) {
    const Vertex n = g.numVertices();
    const int k = h.kEffective;

    PivotTable p;
    p.k = k;
    p.n = n;
    p.pivot.assign(static_cast<std::size_t>(n) * k, kNoVertex);
    p.pivotDist.assign(static_cast<std::size_t>(n) * k, kInfDist);

    std::vector<SsspResult> perLevel;
    perLevel.reserve(k);
    for (int i = 0; i < k; ++i)
        perLevel.push_back(multiSourceDijkstra(g, h.levels[i]));

    for (Vertex v = 0; v < n; ++v) {
        // Top level first, then fix lower levels preferring the higher-set
        // pivot whenever the level distances coincide.
        p.pivot[v * k + (k - 1)] = perLevel[k - 1].sourceOf[v];
        p.pivotDist[v * k + (k - 1)] = perLevel[k - 1].dist[v];
        for (int i = k - 2; i >= 0; --i) {
            if (perLevel[i].dist[v] == perLevel[i + 1].dist[v]) {
                p.pivot[v * k + i] = p.pivot[v * k + i + 1];
                p.pivotDist[v * k + i] = p.pivotDist[v * k + i + 1];
            } else {
                p.pivot[v * k + i] = perLevel[i].sourceOf[v];
                p.pivotDist[v * k + i] = perLevel[i].dist[v];
            }
        }
    }
    return p;
}

namespace {

// Strict admission thresholds for the pruned search from a vertex at the
// given level: dist(v, A_{level+1}) for every v.
std::vector<Dist> levelLimits(const PivotTable& p, int level) {
    std::vector<Dist> limit(p.n);
    for (Vertex v = 0; v < p.n; ++v) limit[v] = p.distToLevel(v, level + 1);
    return limit;
}

}  // namespace

BunchSet computeBunches(const LabeledGraph& g, const Hierarchy& h,
                        const PivotTable& p) {
    const Vertex n = g.numVertices();
    BunchSet b;
    b.bunch.resize(n);

    for (int i = 0; i + 1 < h.kEffective; ++i) {
        auto limit = levelLimits(p, i);
        for (Vertex w : h.levels[i]) {
            if (h.levelOf[w] != i) continue;  // exactly A_i \ A_{i+1}
            ClusterTree t = prunedDijkstra(g, w, limit);
            for (std::size_t j = 0; j < t.size(); ++j)
                b.bunch[t.vertices[j]].push_back({w, t.dist[j]});
        }
    }
    for (auto& list : b.bunch)
        std::sort(list.begin(), list.end(),
                  [](const BunchEntry& a, const BunchEntry& c) {
                      return a.vertex < c.vertex;
                  });
    return b;
}

ClusterForest computeClusters(const LabeledGraph& g, const Hierarchy& h,
                              const PivotTable& p) {
    const Vertex n = g.numVertices();
    ClusterForest f;
    f.treeIndex.assign(n, -1);
    f.labelCluster.resize(g.numLabels());

    std::vector<std::vector<Dist>> limits(std::max(0, h.kEffective - 1));
    for (int i = 0; i + 1 < h.kEffective; ++i) limits[i] = levelLimits(p, i);
    // Roots in id order so the forest layout is canonical.
    for (Vertex u = 0; u < n; ++u) {
        const int i = h.levelOf[u];
        if (i + 1 >= h.kEffective) continue;
        f.treeIndex[u] = static_cast<std::int64_t>(f.trees.size());
        f.trees.push_back(prunedDijkstra(g, u, limits[i]));
    }

    // Label clusters: union of C(u) over level-0 vertices u of each label.
    if (h.kEffective >= 2) {
        for (Label l = 0; l < g.numLabels(); ++l) {
            for (Vertex u : g.verticesWithLabel(l)) {
                if (h.levelOf[u] != 0) continue;
                const ClusterTree& t = f.trees[f.treeIndex[u]];
                for (std::size_t j = 0; j < t.size(); ++j)
                    offerWitness(f.labelCluster[l], t.vertices[j], t.dist[j], u);
            }
        }
    }
    return f;
}

LabelBunch buildLabelBunches(const BunchSet& b, const LabeledGraph& g) {
    LabelBunch lb;
    lb.table.resize(g.numLabels());
    for (Label l = 0; l < g.numLabels(); ++l)
        for (Vertex x : g.verticesWithLabel(l))
            for (const BunchEntry& e : b.bunch[x])
                offerWitness(lb.table[l], e.vertex, e.dist, x);
    return lb;
}

PivotLabelTables buildPivotLabelTables(const PivotTable& p,
                                       const LabeledGraph& g,
                                       const Hierarchy& h) {
    PivotLabelTables t;
    const int k = h.kEffective;
    if (k < 2) return t;
    t.table.resize(k - 1);
    for (int i = 0; i <= k - 2; ++i) {
        t.table[i].resize(g.numLabels());
        for (Label l = 0; l < g.numLabels(); ++l)
            for (Vertex x : g.verticesWithLabel(l)) {
                Vertex y = p.pivotOf(x, i);
                if (y == kNoVertex) continue;
                offerWitness(t.table[i][l], y, p.distToLevel(x, i), x);
            }
    }
    return t;
}

LastLevelLabelDist computeLastLevelLabelDistances(const LabeledGraph& g,
                                                  const Hierarchy& h) {
    LastLevelLabelDist d;
    const auto& last = h.levels[h.kEffective - 1];
    for (Vertex u : last)
        d.table.emplace(u, std::vector<Witness>(g.numLabels()));

    for (Label l = 0; l < g.numLabels(); ++l) {
        const auto& seeds = g.verticesWithLabel(l);
        if (seeds.empty()) continue;
        SsspResult r = multiSourceDijkstra(g, seeds);
        for (Vertex u : last)
            if (r.reachable(u))
                d.table[u][l] = Witness{r.sourceOf[u], r.dist[u]};
    }
    return d;
}

PairSet buildPairSet(const LabeledGraph& g, const Hierarchy& h,
                     const PivotTable& p, const LastLevelLabelDist& d) {
    const Vertex n = g.numVertices();
    const int k = h.kEffective;

    PairSet ps;
    ps.pivotFamilyCount = n;
    ps.labelFamilyCount =
        h.levels[k - 1].size() * static_cast<std::size_t>(g.numLabels());
    ps.familyCountBound = ps.pivotFamilyCount + ps.labelFamilyCount;

    std::vector<PairSet::Pair> raw;
    for (Vertex v = 0; v < n; ++v) {
        Vertex top = p.pivotOf(v, k - 1);
        if (top == kNoVertex) continue;  // unreachable, omitted
        Vertex a = std::min(v, top), b = std::max(v, top);
        raw.push_back({a, b, p.distToLevel(v, k - 1)});
    }
    for (Vertex u : h.levels[k - 1]) {
        const auto& row = d.table.at(u);
        for (Label l = 0; l < g.numLabels(); ++l) {
            if (row[l].vertex == kNoVertex) continue;
            Vertex a = std::min(u, row[l].vertex), b = std::max(u, row[l].vertex);
            raw.push_back({a, b, row[l].dist});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) {
        return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    for (const auto& pr : raw)
        if (ps.pairs.empty() || ps.pairs.back().a != pr.a ||
            ps.pairs.back().b != pr.b)
            ps.pairs.push_back(pr);
    return ps;
}

}  // namespace vlo
