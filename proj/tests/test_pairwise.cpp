#include "doctest.h"

#include <stdexcept>

#include "vlo/dijkstra.hpp"
#include "vlo/pairwise.hpp"

#include "helpers.hpp"

using namespace vlo;

TEST_CASE("exact pairwise oracle stores true shortest paths") {
    LabeledGraph g = testutil::randomGraph(40, 100, 8, 3);
    Hierarchy h = sampleHierarchy(g, 2, 3);
    PivotTable p = computePivots(g, h);
    LastLevelLabelDist ld = computeLastLevelLabelDistances(g, h);
    PairSet ps = buildPairSet(g, h, p, ld);
    PairwisePathOracle o = buildExactPairwise(g, ps);

    CHECK(o.stretch == 1.0);
    CHECK(o.entries.size() == ps.pairs.size());
    for (const auto& pr : ps.pairs) {
        REQUIRE(o.hasPair(pr.a, pr.b));
        const Dist exact = dijkstra(g, pr.a).dist[pr.b];
        CHECK(o.lengthOf(pr.a, pr.b) == exact);

        auto fwd = o.query(pr.a, pr.b);
        CHECK(fwd.length == exact);
        REQUIRE(!fwd.path.empty());
        CHECK(fwd.path.front() == pr.a);
        CHECK(fwd.path.back() == pr.b);
        Dist sum = 0;
        for (std::size_t i = 0; i + 1 < fwd.path.size(); ++i) {
            REQUIRE(g.edgeWeight(fwd.path[i], fwd.path[i + 1]) != kInfDist);
            sum += g.edgeWeight(fwd.path[i], fwd.path[i + 1]);
        }
        CHECK(sum == exact);

        // Querying from the other endpoint reverses the walk.
        auto rev = o.query(pr.b, pr.a);
        CHECK(rev.length == exact);
        CHECK(rev.path.front() == pr.b);
        CHECK(rev.path.back() == pr.a);
    }
}

TEST_CASE("missing pairs throw") {
    LabeledGraph g = testutil::pathGraph(4);
    PairSet ps;
    ps.pairs = {{0, 3, 3.0}};
    PairwisePathOracle o = buildExactPairwise(g, ps);
    CHECK(o.hasPair(0, 3));
    CHECK(!o.hasPair(1, 2));
    CHECK_THROWS_AS(o.query(1, 2), std::runtime_error);
    CHECK_THROWS_AS(o.lengthOf(1, 2), std::runtime_error);
}

TEST_CASE("reflexive pairs and word accounting") {
    LabeledGraph g = testutil::pathGraph(3);
    PairSet ps;
    ps.pairs = {{1, 1, 0.0}, {0, 2, 2.0}};
    PairwisePathOracle o = buildExactPairwise(g, ps);
    auto a = o.query(1, 1);
    CHECK(a.length == 0.0);
    CHECK(a.path == std::vector<Vertex>{1});
    CHECK(o.pairWords() == 4);
    CHECK(o.pathWords() == 1 + 3);
}
