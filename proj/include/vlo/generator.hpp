#pragma once

#include <cstdint>
#include <string>

#include "vlo/graph.hpp"

namespace vlo {

enum class GraphFamily { UniformRandomEdges, Grid, Path, Star };
enum class LabelScheme { Uniform, Clustered };

/// Deterministic instance description. The uniform label scheme assigns
/// label (i mod l) over a seeded shuffle of the vertices; clustered assigns
/// contiguous id blocks.
struct GenSpec {
    GraphFamily family = GraphFamily::UniformRandomEdges;
    Vertex n = 0;
    std::size_t m = 0;          // uniform-random-edges only
    long long maxWeight = 1;    // integer weights drawn from [1, maxWeight]
    Label numLabels = 1;
    LabelScheme scheme = LabelScheme::Uniform;
    std::uint64_t seed = 0;

    // Line-oriented key=value grammar (family, n, m, wmax, labels, scheme,
    // seed); '#' comments.
    static GenSpec parse(const std::string& text);
    std::string format() const;
};

GraphFamily parseFamily(const std::string& s);
LabelScheme parseScheme(const std::string& s);
const char* familyName(GraphFamily f);
const char* schemeName(LabelScheme s);

LabeledGraph generate(const GenSpec& spec);

}  // namespace vlo
