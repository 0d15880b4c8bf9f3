#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "vlo/graph.hpp"
#include "vlo/hierarchy.hpp"

namespace vlo {

/// Pair-restricted path-reporting distance oracle. Answers only queries for
/// pairs of its prescribed set, with reported length within a factor of
/// `stretch` of the true distance. The default build is exact (stretch 1)
/// and stores an explicit shortest path per pair.
struct PairwisePathOracle {
    struct Entry {
        Vertex a, b;  // a <= b
        Dist length;
        std::vector<Vertex> path;  // from a to b
    };

    double stretch = 1.0;
    std::vector<Entry> entries;  // sorted by (a,b)
    std::unordered_map<std::uint64_t, std::uint32_t> index;

    struct Answer {
        Dist length;
        std::vector<Vertex> path;  // oriented from the queried first endpoint
    };

    bool hasPair(Vertex a, Vertex b) const;
    // Throws on a missing pair (that would indicate a preprocessing bug).
    Answer query(Vertex a, Vertex b) const;
    Dist lengthOf(Vertex a, Vertex b) const;  // same contract, no path copy

    std::size_t pairWords() const;  // 2 words per stored pair
    std::size_t pathWords() const;  // explicit path storage, reported apart

    static std::uint64_t key(Vertex a, Vertex b);
};

PairwisePathOracle buildExactPairwise(const LabeledGraph& g,
                                      const PairSet& pairs);

}  // namespace vlo
