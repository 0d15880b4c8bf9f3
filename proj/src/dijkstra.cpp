#include "vlo/dijkstra.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace vlo {

namespace {

// Heap entry ordered lexicographically by (dist, source, parent, vertex) so
// that equal-distance vertices settle in a canonical order even across
// zero-weight edges.
struct HeapEntry {
    Dist d;
    Vertex src;
    Vertex par;
    Vertex v;
    bool operator>(const HeapEntry& o) const {
        return std::tie(d, src, par, v) > std::tie(o.d, o.src, o.par, o.v);
    }
};

using MinHeap =
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<>>;

}  // namespace

std::vector<Vertex> SsspResult::pathTo(Vertex t) const {
    if (!reachable(t)) return {};
    std::vector<Vertex> path;
    for (Vertex v = t; v != kNoVertex; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

SsspResult multiSourceDijkstra(const LabeledGraph& g,
                               std::span<const Vertex> seeds) {
    const Vertex n = g.numVertices();
    SsspResult r;
    r.dist.assign(n, kInfDist);
    r.parent.assign(n, kNoVertex);
    r.sourceOf.assign(n, kNoVertex);

    MinHeap heap;
    for (Vertex s : seeds) {
        // Duplicate seeds are harmless; smaller seed id wins ties.
        if (r.dist[s] == 0 && r.sourceOf[s] <= s) continue;
        r.dist[s] = 0;
        r.sourceOf[s] = s;
        r.parent[s] = kNoVertex;
        heap.push({0, s, kNoVertex, s});
    }

    while (!heap.empty()) {
        auto [d, src, par, u] = heap.top();
        heap.pop();
        if (d != r.dist[u] || src != r.sourceOf[u] || par != r.parent[u])
            continue;  // stale
        for (auto [v, w] : g.neighbors(u)) {
            const Dist nd = d + w;
            if (std::tie(nd, src, u) <
                std::tie(r.dist[v], r.sourceOf[v], r.parent[v])) {
                r.dist[v] = nd;
                r.sourceOf[v] = src;
                r.parent[v] = u;
                heap.push({nd, src, u, v});
            }
        }
    }
    return r;
}

SsspResult dijkstra(const LabeledGraph& g, Vertex source) {
    return multiSourceDijkstra(g, {&source, 1});
}

std::size_t ClusterTree::indexOf(Vertex v) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it != vertices.end() && *it == v)
        return static_cast<std::size_t>(it - vertices.begin());
    return npos;
}

bool ClusterTree::contains(Vertex v) const { return indexOf(v) != npos; }

Dist ClusterTree::distTo(Vertex v) const {
    auto i = indexOf(v);
    return i == npos ? kInfDist : dist[i];
}

std::vector<Vertex> ClusterTree::pathFromRoot(Vertex v) const {
    auto i = indexOf(v);
    if (i == npos) return {};
    std::vector<Vertex> path;
    Vertex cur = v;
    while (cur != kNoVertex) {
        path.push_back(cur);
        cur = parent[indexOf(cur)];
    }
    std::reverse(path.begin(), path.end());
    return path;
}

ClusterTree prunedDijkstra(const LabeledGraph& g, Vertex root,
                           const std::vector<Dist>& limit) {
    const Vertex n = g.numVertices();
    ClusterTree t;
    t.root = root;
    if (!(0 < limit[root])) return t;  // root itself does not qualify

    std::vector<Dist> dist(n, kInfDist);
    std::vector<Vertex> parent(n, kNoVertex);
    MinHeap heap;
    dist[root] = 0;
    heap.push({0, root, kNoVertex, root});

    std::vector<Vertex> reached;
    reached.push_back(root);

    while (!heap.empty()) {
        auto [d, src, par, u] = heap.top();
        heap.pop();
        if (d != dist[u] || par != parent[u]) continue;
        for (auto [v, w] : g.neighbors(u)) {
            const Dist nd = d + w;
            if (nd >= limit[v]) continue;  // strict inequality required
            if (std::tie(nd, u) < std::tie(dist[v], parent[v])) {
                if (dist[v] == kInfDist) reached.push_back(v);
                dist[v] = nd;
                parent[v] = u;
                heap.push({nd, root, u, v});
            }
        }
    }

    std::sort(reached.begin(), reached.end());
    t.vertices = std::move(reached);
    t.parent.reserve(t.vertices.size());
    t.dist.reserve(t.vertices.size());
    for (Vertex v : t.vertices) {
        t.parent.push_back(parent[v]);
        t.dist.push_back(dist[v]);
    }
    return t;
}

}  // namespace vlo
