#include "vlo/brute.hpp"

#include <algorithm>

namespace vlo {

namespace {

// Nearest member of a set under the smaller-id tie rule.
Witness nearestIn(const DistMatrix& d, Vertex v,
                  const std::vector<Vertex>& set) {
    Witness w;
    for (Vertex u : set) {
        const Dist du = d[v][u];
        if (du == kInfDist) continue;
        if (du < w.dist || (du == w.dist && u < w.vertex)) w = {u, du};
    }
    return w;
}

void offer(std::unordered_map<Vertex, Witness>& table, Vertex key, Dist dist,
           Vertex witness) {
    auto [it, inserted] = table.try_emplace(key, Witness{witness, dist});
    if (!inserted && (dist < it->second.dist ||
                      (dist == it->second.dist && witness < it->second.vertex)))
        it->second = Witness{witness, dist};
}

}  // namespace

DistMatrix floydWarshall(const LabeledGraph& g) {
    const Vertex n = g.numVertices();
    DistMatrix d(n, std::vector<Dist>(n, kInfDist));
    for (Vertex v = 0; v < n; ++v) d[v][v] = 0;
    for (const Edge& e : g.edges()) {
        d[e.u][e.v] = std::min(d[e.u][e.v], e.w);
        d[e.v][e.u] = std::min(d[e.v][e.u], e.w);
    }
    for (Vertex m = 0; m < n; ++m)
        for (Vertex i = 0; i < n; ++i) {
            if (d[i][m] == kInfDist) continue;
            for (Vertex j = 0; j < n; ++j)
                if (d[i][m] + d[m][j] < d[i][j]) d[i][j] = d[i][m] + d[m][j];
        }
    return d;
}

PivotTable brutePivots(const LabeledGraph& g, const Hierarchy& h,
                       const DistMatrix& d) {
    const Vertex n = g.numVertices();
    const int k = h.kEffective;
    PivotTable p;
    p.k = k;
    p.n = n;
    p.pivot.assign(static_cast<std::size_t>(n) * k, kNoVertex);
    p.pivotDist.assign(static_cast<std::size_t>(n) * k, kInfDist);

    for (Vertex v = 0; v < n; ++v) {
        std::vector<Witness> nearest(k);
        for (int i = 0; i < k; ++i) nearest[i] = nearestIn(d, v, h.levels[i]);
        p.pivot[v * k + (k - 1)] = nearest[k - 1].vertex;
        p.pivotDist[v * k + (k - 1)] = nearest[k - 1].dist;
        for (int i = k - 2; i >= 0; --i) {
            if (nearest[i].dist == nearest[i + 1].dist) {
                p.pivot[v * k + i] = p.pivot[v * k + i + 1];
                p.pivotDist[v * k + i] = p.pivotDist[v * k + i + 1];
            } else {
                p.pivot[v * k + i] = nearest[i].vertex;
                p.pivotDist[v * k + i] = nearest[i].dist;
            }
        }
    }
    return p;
}

BunchSet bruteBunches(const LabeledGraph& g, const Hierarchy& h,
                      const DistMatrix& d) {
    const Vertex n = g.numVertices();
    const int k = h.kEffective;
    BunchSet b;
    b.bunch.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        for (int i = 0; i <= k - 2; ++i) {
            const Witness next = nearestIn(d, v, h.levels[i + 1]);
            for (Vertex u : h.levels[i]) {
                if (h.levelOf[u] != i) continue;
                if (d[v][u] < next.dist) b.bunch[v].push_back({u, d[v][u]});
            }
        }
        std::sort(b.bunch[v].begin(), b.bunch[v].end(),
                  [](const BunchEntry& a, const BunchEntry& c) {
                      return a.vertex < c.vertex;
                  });
    }
    return b;
}

BruteClusters bruteClusters(const LabeledGraph& g, const Hierarchy& h,
                            const DistMatrix& d) {
    const Vertex n = g.numVertices();
    BruteClusters c;
    for (Vertex u = 0; u < n; ++u) {
        const int i = h.levelOf[u];
        if (i >= h.kEffective - 1) continue;
        c.roots.push_back(u);
        std::vector<BunchEntry> members;
        for (Vertex v = 0; v < n; ++v) {
            const Dist lim = nearestIn(d, v, h.levels[i + 1]).dist;
            if (d[u][v] < lim) members.push_back({v, d[u][v]});
        }
        c.members.push_back(std::move(members));
    }
    return c;
}

LabelBunch bruteLabelBunches(const LabeledGraph& g, const Hierarchy& h,
                             const DistMatrix& d) {
    BunchSet b = bruteBunches(g, h, d);
    LabelBunch lb;
    lb.table.resize(g.numLabels());
    for (Label l = 0; l < g.numLabels(); ++l)
        for (Vertex x : g.verticesWithLabel(l))
            for (const BunchEntry& e : b.bunch[x])
                offer(lb.table[l], e.vertex, e.dist, x);
    return lb;
}

PivotLabelTables brutePivotLabelTables(const LabeledGraph& g,
                                       const Hierarchy& h,
                                       const DistMatrix& d) {
    PivotTable p = brutePivots(g, h, d);
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
                offer(t.table[i][l], y, p.distToLevel(x, i), x);
            }
    }
    return t;
}

LastLevelLabelDist bruteLastLevelLabelDistances(const LabeledGraph& g,
                                                const Hierarchy& h,
                                                const DistMatrix& d) {
    LastLevelLabelDist out;
    for (Vertex u : h.levels[h.kEffective - 1]) {
        std::vector<Witness> row(g.numLabels());
        for (Label l = 0; l < g.numLabels(); ++l) {
            Witness w = nearestIn(d, u, g.verticesWithLabel(l));
            if (w.dist < kInfDist) row[l] = w;
        }
        out.table.emplace(u, std::move(row));
    }
    return out;
}

}  // namespace vlo
