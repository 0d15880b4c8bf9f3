#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "vlo/brute.hpp"
#include "vlo/hierarchy.hpp"

#include "helpers.hpp"

using namespace vlo;

namespace {

bool sameWitnessMap(const std::unordered_map<Vertex, Witness>& a,
                    const std::unordered_map<Vertex, Witness>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& [k, w] : a) {
        auto it = b.find(k);
        if (it == b.end()) return false;
        if (it->second.vertex != w.vertex || it->second.dist != w.dist)
            return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hierarchy shape and truncation rule") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        LabeledGraph g = testutil::randomGraph(50, 120, 16, seed);
        Hierarchy h = sampleHierarchy(g, 3, seed);
        REQUIRE(h.kEffective >= 1);
        REQUIRE(h.kEffective <= 3);
        CHECK(h.levels.size() == (std::size_t)h.kEffective);
        // A_0 is all of V; levels are nested and nonempty.
        CHECK(h.levels[0].size() == g.numVertices());
        for (int i = 1; i < h.kEffective; ++i) {
            CHECK(!h.levels[i].empty());
            CHECK(std::includes(h.levels[i - 1].begin(), h.levels[i - 1].end(),
                                h.levels[i].begin(), h.levels[i].end()));
        }
        // levelOf is the deepest level containing v.
        for (Vertex v = 0; v < g.numVertices(); ++v) {
            const int lv = h.levelOf[v];
            CHECK(std::binary_search(h.levels[lv].begin(), h.levels[lv].end(),
                                     v));
            if (lv + 1 < h.kEffective)
                CHECK(!std::binary_search(h.levels[lv + 1].begin(),
                                          h.levels[lv + 1].end(), v));
        }
    }
}

TEST_CASE("k=1 and single-label degenerate hierarchies") {
    LabeledGraph g = testutil::randomGraph(30, 60, 4, 9);
    Hierarchy h1 = sampleHierarchy(g, 1, 0);
    CHECK(h1.kEffective == 1);
    CHECK(h1.levels[0].size() == g.numVertices());

    // With one label the sampling probability is 1, so every level is full.
    LabeledGraph g1 = testutil::randomGraph(30, 60, 1, 9);
    Hierarchy h = sampleHierarchy(g1, 3, 0);
    CHECK(h.kEffective == 3);
    for (const auto& level : h.levels) CHECK(level.size() == g1.numVertices());
}

TEST_CASE("pivot consistency on level-distance ties") {
    // Path 0-1-2-3-4 with unit weights; A_1 = {0,4}, A_2 = {4}.
    LabeledGraph g = testutil::pathGraph(5);
    Hierarchy h;
    h.kRequested = h.kEffective = 3;
    h.levels = {{0, 1, 2, 3, 4}, {0, 4}, {4}};
    h.levelOf = {1, 0, 0, 0, 2};
    PivotTable p = computePivots(g, h);

    // dist(2, A_1) = dist(2, A_2) = 2, so both pivots must coincide (the
    // level-2 pivot wins even though 0 has the smaller id).
    CHECK(p.distToLevel(2, 1) == 2.0);
    CHECK(p.distToLevel(2, 2) == 2.0);
    CHECK(p.pivotOf(2, 2) == 4);
    CHECK(p.pivotOf(2, 1) == 4);
    // Without a tie the smaller id wins: dist(1, A_1) = 1 via 0 only.
    CHECK(p.pivotOf(1, 1) == 0);
    CHECK(p.pivotOf(1, 0) == 1);
}

TEST_CASE("pipeline structures match the definitional recomputation") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        LabeledGraph g = testutil::randomGraph(40, 90, 8, seed);
        for (int k : {2, 3}) {
            Hierarchy h = sampleHierarchy(g, k, seed * 31 + k);
            DistMatrix d = floydWarshall(g);

            PivotTable p = computePivots(g, h);
            PivotTable bp = brutePivots(g, h, d);
            REQUIRE(p.k == bp.k);
            for (Vertex v = 0; v < g.numVertices(); ++v)
                for (int i = 0; i < p.k; ++i) {
                    CHECK(p.pivotOf(v, i) == bp.pivotOf(v, i));
                    CHECK(p.distToLevel(v, i) == bp.distToLevel(v, i));
                }

            BunchSet b = computeBunches(g, h, p);
            BunchSet bb = bruteBunches(g, h, d);
            for (Vertex v = 0; v < g.numVertices(); ++v) {
                REQUIRE(b.bunch[v].size() == bb.bunch[v].size());
                for (std::size_t j = 0; j < b.bunch[v].size(); ++j) {
                    CHECK(b.bunch[v][j].vertex == bb.bunch[v][j].vertex);
                    CHECK(b.bunch[v][j].dist == bb.bunch[v][j].dist);
                }
            }

            ClusterForest cf = computeClusters(g, h, p);
            BruteClusters bc = bruteClusters(g, h, d);
            REQUIRE(cf.trees.size() == bc.roots.size());
            for (std::size_t t = 0; t < cf.trees.size(); ++t) {
                CHECK(cf.trees[t].root == bc.roots[t]);
                REQUIRE(cf.trees[t].vertices.size() ==
                        bc.members[t].size());
                for (std::size_t j = 0; j < bc.members[t].size(); ++j) {
                    CHECK(cf.trees[t].vertices[j] == bc.members[t][j].vertex);
                    CHECK(cf.trees[t].dist[j] == bc.members[t][j].dist);
                }
            }

            LabelBunch lb = buildLabelBunches(b, g);
            LabelBunch blb = bruteLabelBunches(g, h, d);
            REQUIRE(lb.table.size() == blb.table.size());
            for (Label l = 0; l < g.numLabels(); ++l)
                CHECK(sameWitnessMap(lb.table[l], blb.table[l]));

            PivotLabelTables pt = buildPivotLabelTables(p, g, h);
            PivotLabelTables bpt = brutePivotLabelTables(g, h, d);
            REQUIRE(pt.table.size() == bpt.table.size());
            for (std::size_t i = 0; i < pt.table.size(); ++i)
                for (Label l = 0; l < g.numLabels(); ++l)
                    CHECK(sameWitnessMap(pt.table[i][l], bpt.table[i][l]));

            LastLevelLabelDist ld = computeLastLevelLabelDistances(g, h);
            LastLevelLabelDist bld = bruteLastLevelLabelDistances(g, h, d);
            REQUIRE(ld.table.size() == bld.table.size());
            for (const auto& [u, row] : ld.table) {
                auto it = bld.table.find(u);
                REQUIRE(it != bld.table.end());
                REQUIRE(row.size() == it->second.size());
                for (std::size_t l = 0; l < row.size(); ++l) {
                    CHECK(row[l].vertex == it->second[l].vertex);
                    CHECK(row[l].dist == it->second[l].dist);
                }
            }
        }
    }
}

TEST_CASE("cluster-bunch duality") {
    for (std::uint64_t seed : {2u, 7u, 13u}) {
        LabeledGraph g = testutil::randomGraph(45, 110, 8, seed);
        Hierarchy h = sampleHierarchy(g, 3, seed);
        PivotTable p = computePivots(g, h);
        BunchSet b = computeBunches(g, h, p);
        ClusterForest cf = computeClusters(g, h, p);

        // v in C(u) iff u in B~(v); totals agree and membership agrees.
        CHECK(cf.totalClusterEntries() == b.totalEntries());
        for (const auto& t : cf.trees)
            for (Vertex v : t.vertices) CHECK(b.contains(v, t.root));
        for (Vertex v = 0; v < g.numVertices(); ++v)
            for (const auto& e : b.bunch[v]) {
                const ClusterTree* t = cf.treeOf(e.vertex);
                REQUIRE(t != nullptr);
                CHECK(t->contains(v));
                CHECK(t->distTo(v) == e.dist);
            }
    }
}

TEST_CASE("pair set covers top pivots and counts the raw families") {
    LabeledGraph g = testutil::randomGraph(50, 120, 8, 4);
    Hierarchy h = sampleHierarchy(g, 3, 4);
    PivotTable p = computePivots(g, h);
    LastLevelLabelDist ld = computeLastLevelLabelDistances(g, h);
    PairSet ps = buildPairSet(g, h, p, ld);

    const int top = h.kEffective - 1;
    for (Vertex v = 0; v < g.numVertices(); ++v) {
        const Vertex pv = p.pivotOf(v, top);
        if (pv == kNoVertex) continue;
        CHECK(ps.containsPair(v, pv));
    }
    for (Vertex u : h.levels[top])
        for (Label l = 0; l < g.numLabels(); ++l) {
            const Witness* w = ld.lookup(u, l);
            if (w && w->vertex != kNoVertex) CHECK(ps.containsPair(u, w->vertex));
        }
    CHECK(ps.pivotFamilyCount == g.numVertices());
    CHECK(ps.labelFamilyCount == h.levels[top].size() * g.numLabels());
    CHECK(ps.familyCountBound == ps.pivotFamilyCount + ps.labelFamilyCount);
    // Dedup only shrinks, and sorted order holds.
    CHECK(ps.pairs.size() <= ps.familyCountBound);
    CHECK(std::is_sorted(ps.pairs.begin(), ps.pairs.end(),
                         [](const PairSet::Pair& a, const PairSet::Pair& b) {
                             return std::tie(a.a, a.b) < std::tie(b.a, b.b);
                         }));
}
