#pragma once

#include <span>
#include <vector>

#include "vlo/graph.hpp"

namespace vlo {

/// Result of a (multi-source) shortest-path computation.
/// Ties everywhere are broken deterministically: on equal distance the
/// smaller seed id wins, then the smaller predecessor id.
struct SsspResult {
    std::vector<Dist> dist;       // kInfDist if unreachable
    std::vector<Vertex> parent;   // kNoVertex for seeds / unreachable
    std::vector<Vertex> sourceOf; // nearest seed, kNoVertex if unreachable

    bool reachable(Vertex v) const { return dist[v] < kInfDist; }

    // Path from the nearest seed to t (inclusive); empty if unreachable.
    std::vector<Vertex> pathTo(Vertex t) const;
};

SsspResult multiSourceDijkstra(const LabeledGraph& g,
                               std::span<const Vertex> seeds);
SsspResult dijkstra(const LabeledGraph& g, Vertex source);

/// Shortest-path tree of a pruned Dijkstra run: vertex v is admitted iff
/// its distance from the root is strictly below limit[v].
struct ClusterTree {
    Vertex root = kNoVertex;
    std::vector<Vertex> vertices;  // sorted by id
    std::vector<Vertex> parent;    // parallel to vertices
    std::vector<Dist> dist;        // parallel to vertices

    std::size_t size() const { return vertices.size(); }
    // Index of v in vertices, or npos.
    std::size_t indexOf(Vertex v) const;
    bool contains(Vertex v) const;
    Dist distTo(Vertex v) const;  // kInfDist if absent
    // Path root -> v along tree edges; empty if v absent.
    std::vector<Vertex> pathFromRoot(Vertex v) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

ClusterTree prunedDijkstra(const LabeledGraph& g, Vertex root,
                           const std::vector<Dist>& limit);

}  // namespace vlo
