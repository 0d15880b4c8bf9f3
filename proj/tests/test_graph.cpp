#include "doctest.h"

#include <stdexcept>

#include "vlo/brute.hpp"
#include "vlo/dijkstra.hpp"
#include "vlo/graph.hpp"

#include "helpers.hpp"

using namespace vlo;

TEST_CASE("graph text parsing") {
    const std::string text =
        "# tiny instance\n"
        "4 3 2\n"
        "label 0 0\n"
        "label 1 1\n"
        "label 2 0\n"
        "label 3 1\n"
        "edge 0 1 2\n"
        "edge 1 2 3  # mid edge\n"
        "edge 2 3 1\n";
    LabeledGraph g = loadGraph(text);
    CHECK(g.numVertices() == 4);
    CHECK(g.numEdges() == 3);
    CHECK(g.numLabels() == 2);
    CHECK(g.labelOf(2) == 0);
    CHECK(g.edgeWeight(1, 2) == 3.0);
    CHECK(g.edgeWeight(2, 1) == 3.0);
    CHECK(g.edgeWeight(0, 3) == kInfDist);
    CHECK(g.verticesWithLabel(1) == std::vector<Vertex>{1, 3});

    // Round trip through the canonical formatter.
    LabeledGraph g2 = loadGraph(formatGraph(g));
    CHECK(g2.contentHash() == g.contentHash());
}

TEST_CASE("graph parse errors name the line") {
    const std::string bad =
        "2 1 1\n"
        "label 0 0\n"
        "label 1 0\n"
        "edge 0 5 1\n";
    CHECK_THROWS_WITH_AS(loadGraph(bad), doctest::Contains("line 4"),
                         std::runtime_error);
    CHECK_THROWS_AS(loadGraph("not a header\n"), std::runtime_error);
}

TEST_CASE("parallel edges collapse to minimum, self loops rejected") {
    std::vector<Edge> edges = {{0, 1, 5.0}, {1, 0, 2.0}, {0, 1, 9.0}};
    LabeledGraph g(2, 1, edges, {0, 0});
    CHECK(g.numEdges() == 1);
    CHECK(g.edgeWeight(0, 1) == 2.0);

    CHECK_THROWS_AS(LabeledGraph(2, 1, {{1, 1, 1.0}}, {0, 0}),
                    std::invalid_argument);
}

TEST_CASE("dijkstra matches floyd-warshall on random instances") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        LabeledGraph g = testutil::randomGraph(40, 100, 3, seed);
        DistMatrix d = floydWarshall(g);
        for (Vertex s = 0; s < g.numVertices(); ++s) {
            SsspResult r = dijkstra(g, s);
            for (Vertex t = 0; t < g.numVertices(); ++t)
                CHECK(r.dist[t] == d[s][t]);
        }
    }
}

TEST_CASE("multi-source equals min over single sources") {
    LabeledGraph g = testutil::randomGraph(40, 90, 4, 11);
    std::vector<Vertex> seeds = {3, 17, 29};
    SsspResult multi = multiSourceDijkstra(g, seeds);
    for (Vertex t = 0; t < g.numVertices(); ++t) {
        Dist best = kInfDist;
        for (Vertex s : seeds) best = std::min(best, dijkstra(g, s).dist[t]);
        CHECK(multi.dist[t] == best);
        if (best < kInfDist) {
            // sourceOf is a seed achieving the minimum.
            CHECK(dijkstra(g, multi.sourceOf[t]).dist[t] == best);
        }
    }
}

TEST_CASE("tie-breaking prefers the smaller seed id") {
    // 0 -1- 2 -1- 1 : both seeds at distance 1 from vertex 2.
    LabeledGraph g(3, 1, {{0, 2, 1.0}, {1, 2, 1.0}}, {0, 0, 0});
    std::vector<Vertex> seeds = {1, 0};
    SsspResult r = multiSourceDijkstra(g, seeds);
    CHECK(r.sourceOf[2] == 0);
}

TEST_CASE("disconnected vertices are unreachable") {
    LabeledGraph g(4, 1, {{0, 1, 1.0}}, {0, 0, 0, 0});
    SsspResult r = dijkstra(g, 0);
    CHECK(r.dist[2] == kInfDist);
    CHECK(r.sourceOf[2] == kNoVertex);
    CHECK(r.pathTo(2).empty());
    CHECK(r.pathTo(1) == std::vector<Vertex>{0, 1});
}

TEST_CASE("path reconstruction sums to the distance") {
    LabeledGraph g = testutil::randomGraph(35, 80, 2, 5);
    SsspResult r = dijkstra(g, 0);
    for (Vertex t = 0; t < g.numVertices(); ++t) {
        if (!r.reachable(t)) continue;
        auto p = r.pathTo(t);
        REQUIRE(!p.empty());
        CHECK(p.front() == 0);
        CHECK(p.back() == t);
        Dist sum = 0;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            REQUIRE(g.edgeWeight(p[i], p[i + 1]) != kInfDist);
            sum += g.edgeWeight(p[i], p[i + 1]);
        }
        CHECK(sum == r.dist[t]);
    }
}

TEST_CASE("pruned dijkstra admits strictly below the limit") {
    LabeledGraph g = testutil::pathGraph(5);  // 0-1-2-3-4, unit weights

    SUBCASE("infinite limits give the full tree") {
        std::vector<Dist> limit(5, kInfDist);
        ClusterTree t = prunedDijkstra(g, 2, limit);
        CHECK(t.size() == 5);
        CHECK(t.distTo(0) == 2.0);
        CHECK(t.pathFromRoot(4) == std::vector<Vertex>{2, 3, 4});
    }

    SUBCASE("strict inequality at the boundary") {
        std::vector<Dist> limit(5, 2.0);
        ClusterTree t = prunedDijkstra(g, 2, limit);
        CHECK(t.vertices == std::vector<Vertex>{1, 2, 3});
        CHECK(!t.contains(0));
    }

    SUBCASE("the root itself obeys the limit") {
        std::vector<Dist> limit(5, 0.0);
        ClusterTree t = prunedDijkstra(g, 2, limit);
        CHECK(t.size() == 0);
        CHECK(!t.contains(2));
    }
}
