#include "doctest.h"

#include "vlo/pr_oracle.hpp"
#include "vlo/verifier.hpp"

#include "helpers.hpp"

using namespace vlo;

TEST_CASE("self-label queries are free and exact") {
    LabeledGraph g = testutil::randomGraph(30, 70, 4, 1);
    PathReportingOracle o = PathReportingOracle::build(g, 2, 1);
    for (Vertex v = 0; v < g.numVertices(); ++v) {
        QueryResult r = o.queryDistance(v, g.labelOf(v));
        CHECK(r.distance == 0.0);
        CHECK(r.phase == QueryPhase::SelfLabel);
        CHECK(r.probes == 0);
        QueryResult rp = o.queryPath(v, g.labelOf(v));
        REQUIRE(rp.path);
        CHECK(*rp.path == std::vector<Vertex>{v});
    }
}

TEST_CASE("empty labels answer infinity") {
    // Label 3 exists in the universe but no vertex carries it.
    LabeledGraph g(4, 4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}},
                   {0, 1, 2, 0});
    PathReportingOracle o = PathReportingOracle::build(g, 2, 0);
    for (Vertex v = 0; v < 4; ++v) {
        QueryResult r = o.queryDistance(v, 3);
        CHECK(r.distance == kInfDist);
        CHECK(r.phase == QueryPhase::Unreachable);
        CHECK(!o.queryPath(v, 3).path);
    }
}

TEST_CASE("stretch, paths, and probes across seeds") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        LabeledGraph g = testutil::randomGraph(45, 110, 6, seed);
        GroundTruth gt = computeGroundTruth(g);
        for (int k : {2, 3}) {
            for (bool shortcut : {true, false}) {
                PathReportingOracle o =
                    PathReportingOracle::build(g, k, seed * 17 + k, shortcut);
                const int ke = o.kEffective();
                const double bound = std::max(
                    1.0, shortcut ? 4.0 * ke - 5.0 : 4.0 * ke - 3.0);
                AuditReport s = auditStretch(
                    g, gt,
                    [&](Vertex v, Label l) { return o.queryDistance(v, l); },
                    bound, "s");
                CHECK_MESSAGE(s.passed(), s.detailed());
                AuditReport p = auditPaths(
                    g, gt,
                    [&](Vertex v, Label l) { return o.queryPath(v, l); }, "p");
                CHECK_MESSAGE(p.passed(), p.detailed());
                AuditReport pr = auditProbes(
                    g, [&](Vertex v, Label l) { return o.queryDistance(v, l); },
                    [&](Vertex) { return 2.0 * ke + 2.0; }, "probes");
                CHECK_MESSAGE(pr.passed(), pr.detailed());
            }
        }
    }
}

TEST_CASE("cluster shortcut answers are exact when they fire") {
    LabeledGraph g = testutil::randomGraph(45, 100, 6, 11);
    GroundTruth gt = computeGroundTruth(g);
    PathReportingOracle o = PathReportingOracle::build(g, 3, 2, true);
    std::size_t fired = 0;
    for (Vertex v = 0; v < g.numVertices(); ++v)
        for (Label l = 0; l < g.numLabels(); ++l) {
            QueryResult r = o.queryDistance(v, l);
            if (r.phase == QueryPhase::ClusterShortcut) {
                CHECK(r.distance == gt.of(v, l));
                ++fired;
            }
        }
    CHECK(fired > 0);
}

TEST_CASE("identical builds answer identically") {
    LabeledGraph g = testutil::randomGraph(40, 95, 5, 21);
    PathReportingOracle a = PathReportingOracle::build(g, 3, 77);
    PathReportingOracle b = PathReportingOracle::build(g, 3, 77);
    for (Vertex v = 0; v < g.numVertices(); ++v)
        for (Label l = 0; l < g.numLabels(); ++l) {
            QueryResult ra = a.queryPath(v, l);
            QueryResult rb = b.queryPath(v, l);
            CHECK(ra.distance == rb.distance);
            CHECK(ra.phase == rb.phase);
            CHECK(ra.probes == rb.probes);
            CHECK(ra.path == rb.path);
        }
}

TEST_CASE("disconnected components still answer within bound") {
    // Two components; label 1 lives only in the second one.
    LabeledGraph g(6, 2,
                   {{0, 1, 2.0}, {1, 2, 2.0}, {3, 4, 1.0}, {4, 5, 1.0}},
                   {0, 0, 0, 0, 1, 1});
    GroundTruth gt = computeGroundTruth(g);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        PathReportingOracle o = PathReportingOracle::build(g, 2, seed);
        AuditReport s = auditStretch(
            g, gt, [&](Vertex v, Label l) { return o.queryDistance(v, l); },
            std::max(1.0, 4.0 * o.kEffective() - 5.0), "s");
        CHECK_MESSAGE(s.passed(), s.detailed());
    }
}
