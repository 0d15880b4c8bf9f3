#include "doctest.h"

#include <stdexcept>

#include "vlo/verifier.hpp"
#include "vlo/vl2k_oracle.hpp"

#include "helpers.hpp"

using namespace vlo;

TEST_CASE("k=1 answers are exact") {
    for (std::uint64_t seed : {0u, 5u}) {
        LabeledGraph g = testutil::randomGraph(40, 90, 6, seed);
        GroundTruth gt = computeGroundTruth(g);
        TwoSidedOracle o = TwoSidedOracle::build(g, 1, seed);
        for (Vertex v = 0; v < g.numVertices(); ++v)
            for (Label l = 0; l < g.numLabels(); ++l)
                CHECK(o.query(v, l).distance == gt.of(v, l));
    }
}

TEST_CASE("stretch and probe bounds across k") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        LabeledGraph g = testutil::randomGraph(45, 110, 8, seed);
        GroundTruth gt = computeGroundTruth(g);
        for (int k : {2, 3, 4}) {
            TwoSidedOracle o = TwoSidedOracle::build(g, k, seed * 13 + k);
            const int ke = o.kEffective();
            AuditReport s = auditStretch(
                g, gt, [&](Vertex v, Label l) { return o.query(v, l); },
                2.0 * ke - 1.0, "s");
            CHECK_MESSAGE(s.passed(), s.detailed());
            // Probe budget: one per level below the top, the whole bunch,
            // plus the last-level lookup.
            AuditReport p = auditProbes(
                g, [&](Vertex v, Label l) { return o.query(v, l); },
                [&](Vertex v) {
                    return (ke - 1.0) + (double)o.bunches.bunch[v].size() + 1.0;
                },
                "probes");
            CHECK_MESSAGE(p.passed(), p.detailed());
        }
    }
}

TEST_CASE("path reporting extension") {
    LabeledGraph g = testutil::randomGraph(40, 95, 6, 3);
    GroundTruth gt = computeGroundTruth(g);
    TwoSidedOracle o = TwoSidedOracle::build(g, 3, 9, true);
    REQUIRE(o.pathReporting);
    AuditReport p = auditPaths(
        g, gt, [&](Vertex v, Label l) { return o.queryPath(v, l); }, "p");
    CHECK_MESSAGE(p.passed(), p.detailed());
    // Reported walks never beat the distance answer.
    for (Vertex v = 0; v < g.numVertices(); ++v)
        for (Label l = 0; l < g.numLabels(); ++l)
            CHECK(o.queryPath(v, l).distance == o.query(v, l).distance);
}

TEST_CASE("path queries require the path-reporting build") {
    LabeledGraph g = testutil::randomGraph(20, 40, 3, 0);
    TwoSidedOracle o = TwoSidedOracle::build(g, 2, 0, false);
    CHECK_THROWS_AS(o.queryPath(1, 0), std::runtime_error);
}

TEST_CASE("pivot label tables stay within one pivot per labeled vertex") {
    for (std::uint64_t seed : {1u, 4u, 9u}) {
        LabeledGraph g = testutil::randomGraph(50, 120, 8, seed);
        TwoSidedOracle o = TwoSidedOracle::build(g, 3, seed);
        for (const auto& perLabel : o.pivotTables.table) {
            std::size_t levelTotal = 0;
            for (Label l = 0; l < g.numLabels(); ++l) {
                // P_i(l) holds distinct pivots of vertices labeled l.
                CHECK(perLabel[l].size() <= g.verticesWithLabel(l).size());
                levelTotal += perLabel[l].size();
            }
            CHECK(levelTotal <= g.numVertices());
        }
    }
}
