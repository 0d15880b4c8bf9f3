#include "doctest.h"

#include <stdexcept>

#include "vlo/bundle.hpp"

#include "helpers.hpp"

using namespace vlo;

TEST_CASE("path-reporting bundles round trip bit-identically") {
    LabeledGraph g = testutil::randomGraph(40, 95, 6, 14);
    PathReportingOracle o = PathReportingOracle::build(g, 3, 5);
    const std::string bytes = serializeBundle(o);

    Bundle b = loadBundle(bytes, g);
    REQUIRE(b.kind == Bundle::Kind::PathReporting);
    REQUIRE(b.pr);
    CHECK(serializeBundle(*b.pr) == bytes);

    for (Vertex v = 0; v < g.numVertices(); ++v)
        for (Label l = 0; l < g.numLabels(); ++l) {
            QueryResult a = o.queryPath(v, l);
            QueryResult c = b.pr->queryPath(v, l);
            CHECK(a.distance == c.distance);
            CHECK(a.phase == c.phase);
            CHECK(a.probes == c.probes);
            CHECK(a.path == c.path);
        }
}

TEST_CASE("two-sided bundles round trip with and without path support") {
    LabeledGraph g = testutil::randomGraph(35, 80, 5, 3);
    for (bool paths : {false, true}) {
        TwoSidedOracle o = TwoSidedOracle::build(g, 2, 8, paths);
        const std::string bytes = serializeBundle(o);
        Bundle b = loadBundle(bytes, g);
        REQUIRE(b.kind == Bundle::Kind::TwoSided);
        REQUIRE(b.ts);
        CHECK(b.ts->pathReporting == paths);
        CHECK(serializeBundle(*b.ts) == bytes);
        for (Vertex v = 0; v < g.numVertices(); ++v)
            for (Label l = 0; l < g.numLabels(); ++l)
                CHECK(o.query(v, l).distance == b.ts->query(v, l).distance);
    }
}

TEST_CASE("bundles refuse foreign or damaged input") {
    LabeledGraph g = testutil::randomGraph(30, 60, 4, 1);
    LabeledGraph other = testutil::randomGraph(30, 60, 4, 2);
    PathReportingOracle o = PathReportingOracle::build(g, 2, 0);
    std::string bytes = serializeBundle(o);

    CHECK_THROWS_AS(loadBundle(bytes, other), std::runtime_error);
    CHECK_THROWS_AS(loadBundle(bytes.substr(0, bytes.size() / 2), g),
                    std::runtime_error);
    CHECK_THROWS_AS(loadBundle(bytes + "x", g), std::runtime_error);
    std::string wrongMagic = bytes;
    wrongMagic[0] ^= 0x7f;
    CHECK_THROWS_AS(loadBundle(wrongMagic, g), std::runtime_error);
    CHECK_THROWS_AS(loadBundle("", g), std::runtime_error);
}
