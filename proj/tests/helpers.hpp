#pragma once

#include "vlo/generator.hpp"
#include "vlo/graph.hpp"

namespace vlo::testutil {

inline LabeledGraph randomGraph(Vertex n, std::size_t m, Label labels,
                                std::uint64_t seed, long long wmax = 20) {
    GenSpec spec;
    spec.family = GraphFamily::UniformRandomEdges;
    spec.n = n;
    spec.m = m;
    spec.maxWeight = wmax;
    spec.numLabels = labels;
    spec.seed = seed;
    return generate(spec);
}

inline LabeledGraph pathGraph(Vertex n, Label labels = 1) {
    std::vector<Edge> edges;
    std::vector<Label> lab(n);
    for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1, 1.0});
    for (Vertex v = 0; v < n; ++v) lab[v] = v % labels;
    return LabeledGraph(n, labels, std::move(edges), std::move(lab));
}

}  // namespace vlo::testutil
