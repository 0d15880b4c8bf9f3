#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace vlo {

using Vertex = std::uint32_t;
using Label = std::uint32_t;
using Dist = double;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr Dist kInfDist = std::numeric_limits<Dist>::infinity();

struct Edge {
    Vertex u;
    Vertex v;
    Dist w;
};

/// Weighted undirected graph with one label per vertex.
/// Immutable after construction; parallel edges are collapsed to the
/// minimum weight, self-loops are rejected.
class LabeledGraph {
public:
    LabeledGraph(Vertex n, Label numLabels, std::vector<Edge> edges,
                 std::vector<Label> labelOf);

    Vertex numVertices() const { return n_; }
    Label numLabels() const { return numLabels_; }
    std::size_t numEdges() const { return edges_.size(); }

    Label labelOf(Vertex v) const { return labelOf_[v]; }
    const std::vector<std::pair<Vertex, Dist>>& neighbors(Vertex v) const {
        return adj_[v];
    }
    const std::vector<Vertex>& verticesWithLabel(Label l) const {
        return byLabel_[l];
    }
    const std::vector<Edge>& edges() const { return edges_; }

    // kInfDist if (u,v) is not an edge.
    Dist edgeWeight(Vertex u, Vertex v) const;

    // Hash over the canonical content (n, l, labels, sorted edges), used to
    // tie serialized bundles to the graph they were built from.
    std::uint64_t contentHash() const { return hash_; }

private:
    Vertex n_;
    Label numLabels_;
    std::vector<Edge> edges_;                                // sorted, u < v
    std::vector<Label> labelOf_;
    std::vector<std::vector<std::pair<Vertex, Dist>>> adj_;  // sorted by id
    std::vector<std::vector<Vertex>> byLabel_;
    std::uint64_t hash_;
};

// Line-oriented text format:
//   n m l
//   label <vertex-id> <label-id>     (n lines)
//   edge <u> <v> <w>                 (m lines)
// '#' starts a comment. Throws std::runtime_error naming the bad line.
LabeledGraph loadGraph(const std::string& text);
LabeledGraph loadGraphFile(const std::string& path);

std::string formatGraph(const LabeledGraph& g);
void saveGraphFile(const LabeledGraph& g, const std::string& path);

}  // namespace vlo
