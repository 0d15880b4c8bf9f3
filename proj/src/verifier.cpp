#include "vlo/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "vlo/dijkstra.hpp"
#include "vlo/pr_oracle.hpp"
#include "vlo/vl2k_oracle.hpp"

namespace vlo {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

GroundTruth computeGroundTruth(const LabeledGraph& g) {
    GroundTruth gt;
    const Label L = g.numLabels();
    gt.dist.assign(L, std::vector<Dist>(g.numVertices(), kInfDist));
    gt.witness.assign(L, std::vector<Vertex>(g.numVertices(), kNoVertex));
    for (Label l = 0; l < L; ++l) {
        const auto& seeds = g.verticesWithLabel(l);
        if (seeds.empty()) continue;
        SsspResult r = multiSourceDijkstra(g, seeds);
        gt.dist[l] = std::move(r.dist);
        gt.witness[l] = std::move(r.sourceOf);
    }
    return gt;
}

void AuditReport::stat(const std::string& key, const std::string& value) {
    stats.emplace_back(key, value);
}

void AuditReport::stat(const std::string& key, double value) {
    stats.emplace_back(key, fmt(value));
}

void AuditReport::violation(const std::string& what) {
    if (violations.size() < 1000) violations.push_back(what);
}

void AuditReport::merge(const AuditReport& other) {
    for (const auto& s : other.stats)
        stats.emplace_back(other.name + "." + s.first, s.second);
    for (const auto& v : other.violations) violation(other.name + ": " + v);
}

std::string AuditReport::summaryLine() const {
    std::ostringstream out;
    out << "AUDIT " << name << " pass=" << (passed() ? 1 : 0)
        << " violations=" << violations.size();
    for (const auto& [k, v] : stats) out << ' ' << k << '=' << v;
    return out.str();
}

std::string AuditReport::detailed() const {
    std::ostringstream out;
    out << "[" << name << "] " << (passed() ? "PASS" : "FAIL") << "\n";
    for (const auto& [k, v] : stats) out << "  " << k << " = " << v << "\n";
    for (const auto& v : violations) out << "  VIOLATION: " << v << "\n";
    return out.str();
}

AuditReport auditStretch(const LabeledGraph& g, const GroundTruth& gt,
                         const QueryFn& query, double bound,
                         const std::string& name) {
    AuditReport rep;
    rep.name = name;
    double maxStretch = 0.0, sumStretch = 0.0;
    std::size_t samples = 0;
    std::vector<double> ratios;

    for (Vertex v = 0; v < g.numVertices(); ++v) {
        for (Label l = 0; l < g.numLabels(); ++l) {
            const Dist exact = gt.of(v, l);
            const QueryResult r = query(v, l);
            if (exact == kInfDist) {
                if (r.distance != kInfDist)
                    rep.violation("finite answer for unreachable (" +
                                  std::to_string(v) + "," + std::to_string(l) +
                                  ")");
                continue;
            }
            double ratio;
            if (exact == 0) {
                // Exactness at distance zero is implied by the analyses.
                ratio = 1.0;
                if (r.distance != 0)
                    rep.violation("nonzero answer at gt=0 for (" +
                                  std::to_string(v) + "," + std::to_string(l) +
                                  ")");
            } else {
                ratio = r.distance / exact;
                if (r.distance < exact)
                    rep.violation("underestimate at (" + std::to_string(v) +
                                  "," + std::to_string(l) + "): " +
                                  fmt(r.distance) + " < " + fmt(exact));
                if (r.distance > bound * exact)
                    rep.violation("stretch " + fmt(ratio) + " > " + fmt(bound) +
                                  " at (" + std::to_string(v) + "," +
                                  std::to_string(l) + ")");
            }
            maxStretch = std::max(maxStretch, ratio);
            sumStretch += ratio;
            ratios.push_back(ratio);
            ++samples;
        }
    }
    rep.stat("queries", static_cast<double>(samples));
    rep.stat("bound", bound);
    rep.stat("max_stretch", maxStretch);
    if (samples) {
        rep.stat("mean_stretch", sumStretch / samples);
        std::sort(ratios.begin(), ratios.end());
        rep.stat("p99_stretch", ratios[(ratios.size() * 99) / 100]);
    }
    return rep;
}

AuditReport auditPaths(const LabeledGraph& g, const GroundTruth& gt,
                       const QueryFn& pathQuery, const std::string& name) {
    AuditReport rep;
    rep.name = name;
    std::size_t paths = 0;

    for (Vertex v = 0; v < g.numVertices(); ++v) {
        for (Label l = 0; l < g.numLabels(); ++l) {
            const QueryResult r = pathQuery(v, l);
            const std::string at =
                "(" + std::to_string(v) + "," + std::to_string(l) + ")";
            if (r.distance == kInfDist) {
                if (gt.of(v, l) != kInfDist)
                    rep.violation("no answer for reachable " + at);
                if (r.path)
                    rep.violation("path present on infinite answer " + at);
                continue;
            }
            if (!r.path) {
                rep.violation("missing path " + at);
                continue;
            }
            const auto& p = *r.path;
            ++paths;
            if (p.empty() || p.front() != v) {
                rep.violation("path does not start at v " + at);
                continue;
            }
            if (g.labelOf(p.back()) != l) {
                rep.violation("path endpoint lacks queried label " + at);
                continue;
            }
            Dist sum = 0;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                const Dist w = g.edgeWeight(p[i], p[i + 1]);
                if (w == kInfDist) {
                    rep.violation("non-edge (" + std::to_string(p[i]) + "," +
                                  std::to_string(p[i + 1]) + ") in path " + at);
                    ok = false;
                    break;
                }
                sum += w;
            }
            if (ok && sum != r.distance)
                rep.violation("path length " + fmt(sum) +
                              " != reported distance " + fmt(r.distance) +
                              " at " + at);
        }
    }
    rep.stat("paths_checked", static_cast<double>(paths));
    return rep;
}

AuditReport auditProbes(const LabeledGraph& g, const QueryFn& query,
                        const std::function<double(Vertex)>& boundFn,
                        const std::string& name) {
    AuditReport rep;
    rep.name = name;
    std::size_t samples = 0;
    double sum = 0;
    int maxProbes = 0;

    for (Vertex v = 0; v < g.numVertices(); ++v) {
        for (Label l = 0; l < g.numLabels(); ++l) {
            const QueryResult r = query(v, l);
            sum += r.probes;
            maxProbes = std::max(maxProbes, r.probes);
            if (r.probes > boundFn(v))
                rep.violation("probe count " + std::to_string(r.probes) +
                              " exceeds bound " + fmt(boundFn(v)) + " at (" +
                              std::to_string(v) + "," + std::to_string(l) +
                              ")");
            ++samples;
        }
    }
    rep.stat("queries", static_cast<double>(samples));
    rep.stat("mean_probes", samples ? sum / samples : 0.0);
    rep.stat("max_probes", static_cast<double>(maxProbes));
    return rep;
}

AuditReport auditSize(const SizeBreakdown& sb, int k, Vertex n, Label l,
                      double maxConstant, const std::string& name) {
    AuditReport rep;
    rep.name = name;
    const double budgetUnit =
        k * static_cast<double>(n) * std::pow(static_cast<double>(l), 1.0 / k);
    for (const auto& [item, words] : sb.items)
        rep.stat(item, static_cast<double>(words));
    rep.stat("core_words", static_cast<double>(sb.coreWords));
    rep.stat("extra_words", static_cast<double>(sb.extraWords));
    const double c = sb.coreWords / budgetUnit;
    rep.stat("empirical_constant", c);
    rep.stat("max_constant", maxConstant);
    if (c > maxConstant)
        rep.violation("size constant " + fmt(c) + " exceeds " +
                      fmt(maxConstant));
    return rep;
}

namespace {

std::size_t pivotWords(const PivotTable& p) {
    return 2 * static_cast<std::size_t>(p.n) * p.k;
}

}  // namespace

SizeBreakdown sizeBreakdown(const PathReportingOracle& o) {
    SizeBreakdown sb;
    const std::size_t item1 = pivotWords(o.pivots) + 2 * o.bunches.totalEntries();
    const std::size_t item2 = 2 * o.clusters.totalClusterEntries();
    const std::size_t item3 = 2 * o.labelBunch.totalEntries();
    const std::size_t item4 = o.pairwise.pairWords();
    const std::size_t shortcut = 2 * o.clusters.totalLabelClusterEntries();
    sb.items = {{"pivots_bunches", item1},
                {"cluster_trees", item2},
                {"label_bunches", item3},
                {"pair_oracle", item4},
                {"label_clusters", shortcut},
                {"pair_paths", o.pairwise.pathWords()}};
    sb.coreWords = item1 + item2 + item3;
    sb.extraWords = o.pairwise.pathWords();
    return sb;
}

SizeBreakdown sizeBreakdown(const TwoSidedOracle& o) {
    SizeBreakdown sb;
    const std::size_t item1 = pivotWords(o.pivots) + 2 * o.bunches.totalEntries();
    const std::size_t item2 = 2 * o.labelBunch.totalEntries();
    const std::size_t item3 = 2 * o.pivotTables.totalEntries();
    std::size_t lastLevelSlots = 0;
    for (const auto& [u, row] : o.lastLevel.table) lastLevelSlots += row.size();
    const std::size_t item4 = 2 * lastLevelSlots;
    sb.items = {{"pivots_bunches", item1},
                {"label_bunches", item2},
                {"pivot_label_tables", item3},
                {"last_level_table", item4}};
    sb.coreWords = item1 + item2 + item3 + item4;
    if (o.pathReporting) {
        sb.items.emplace_back("cluster_trees",
                              2 * o.clusters.totalClusterEntries());
        sb.items.emplace_back("pair_oracle", o.pairwise.pairWords());
        sb.items.emplace_back("pair_paths", o.pairwise.pathWords());
        sb.extraWords = 2 * o.clusters.totalClusterEntries() +
                        o.pairwise.pairWords() + o.pairwise.pathWords();
    }
    return sb;
}

namespace {

class DistRows {
public:
    explicit DistRows(const LabeledGraph& g) : g_(g) {}
    const std::vector<Dist>& row(Vertex u) {
        auto it = cache_.find(u);
        if (it == cache_.end())
            it = cache_.emplace(u, dijkstra(g_, u).dist).first;
        return it->second;
    }

private:
    const LabeledGraph& g_;
    std::unordered_map<Vertex, std::vector<Dist>> cache_;
};

bool inBunchOf(const Hierarchy& h, const BunchSet& b, Vertex owner, Vertex u) {
    // B(owner) = B~(owner) union A_{k-1}
    return h.inLastLevel(u) || b.contains(owner, u);
}

}  // namespace

AuditReport checkLemmas(const LabeledGraph& g, const Hierarchy& h,
                        const PivotTable& p, const BunchSet& b,
                        const GroundTruth& gt) {
    AuditReport rep;
    rep.name = "lemmas";
    const int k = h.kEffective;
    DistRows rows(g);

    std::size_t pairsChecked = 0, skipped = 0;

    // Pivot-in-bunch property, all v and levels.
    for (Vertex v = 0; v < g.numVertices(); ++v)
        for (int i = 0; i < k; ++i) {
            const Vertex pv = p.pivotOf(v, i);
            if (pv == kNoVertex) continue;
            if (!inBunchOf(h, b, v, pv))
                rep.violation("pivot p_" + std::to_string(i) + "(" +
                              std::to_string(v) + ") not in bunch");
        }

    for (Vertex v = 0; v < g.numVertices(); ++v) {
        for (Label l = 0; l < g.numLabels(); ++l) {
            const Dist delta = gt.of(v, l);
            if (delta == kInfDist) continue;
            const Vertex u = gt.witnessOf(v, l);
            const std::string at =
                "(" + std::to_string(v) + "," + std::to_string(l) + ")";

            // One-sided minimal index: smallest j with p_j(v) in B(u).
            int j = -1;
            for (int i = 0; i < k; ++i) {
                const Vertex pv = p.pivotOf(v, i);
                if (pv != kNoVertex && inBunchOf(h, b, u, pv)) {
                    j = i;
                    break;
                }
            }
            if (j < 0) {
                ++skipped;
                continue;
            }
            for (int i = 0; i <= j; ++i)
                if (p.distToLevel(v, i) > 2.0 * i * delta)
                    rep.violation("one-sided inductive bound fails at " + at +
                                  " level " + std::to_string(i));
            {
                const Vertex pj = p.pivotOf(v, j);
                const Dist lhs = p.distToLevel(v, j) + rows.row(pj)[u];
                if (lhs > (4.0 * k - 3.0) * delta)
                    rep.violation("one-sided conclusion " + fmt(lhs) + " > " +
                                  fmt((4.0 * k - 3.0) * delta) + " at " + at);
            }

            // Two-sided minimal index: smallest i with p_i(v) in B(u) or
            // p_i(u) in B(v).
            int i2 = -1;
            for (int i = 0; i < k; ++i) {
                const Vertex pv = p.pivotOf(v, i);
                const Vertex pu = p.pivotOf(u, i);
                const bool hit =
                    (pv != kNoVertex && inBunchOf(h, b, u, pv)) ||
                    (pu != kNoVertex && inBunchOf(h, b, v, pu));
                if (hit) {
                    i2 = i;
                    break;
                }
            }
            if (i2 < 0) {
                ++skipped;
                continue;
            }
            for (int i = 0; i <= i2; ++i) {
                if (p.distToLevel(v, i) > static_cast<double>(i) * delta)
                    rep.violation("two-sided inductive bound (v) fails at " +
                                  at + " level " + std::to_string(i));
                if (p.distToLevel(u, i) > static_cast<double>(i) * delta)
                    rep.violation("two-sided inductive bound (u) fails at " +
                                  at + " level " + std::to_string(i));
            }
            {
                // Measure through whichever side produced the hit.
                Dist lhs = kInfDist;
                const Vertex pv = p.pivotOf(v, i2);
                const Vertex pu = p.pivotOf(u, i2);
                if (pv != kNoVertex && inBunchOf(h, b, u, pv))
                    lhs = std::min(lhs, p.distToLevel(v, i2) + rows.row(pv)[u]);
                if (pu != kNoVertex && inBunchOf(h, b, v, pu))
                    lhs = std::min(lhs, p.distToLevel(u, i2) + rows.row(pu)[v]);
                if (lhs > (2.0 * i2 + 1.0) * delta)
                    rep.violation("two-sided conclusion " + fmt(lhs) + " > " +
                                  fmt((2.0 * i2 + 1.0) * delta) + " at " + at);
            }
            ++pairsChecked;
        }
    }

    // Bunch statistics for the caller to aggregate across seeds.
    std::size_t total = 0, maxBunch = 0;
    for (const auto& list : b.bunch) {
        total += list.size();
        maxBunch = std::max(maxBunch, list.size());
    }
    rep.stat("pairs_checked", static_cast<double>(pairsChecked));
    rep.stat("pairs_skipped", static_cast<double>(skipped));
    rep.stat("mean_bunch", g.numVertices()
                               ? static_cast<double>(total) / g.numVertices()
                               : 0.0);
    rep.stat("max_bunch", static_cast<double>(maxBunch));
    return rep;
}

}  // namespace vlo
