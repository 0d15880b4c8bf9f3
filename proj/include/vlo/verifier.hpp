#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "vlo/brute.hpp"
#include "vlo/graph.hpp"
#include "vlo/hierarchy.hpp"
#include "vlo/query.hpp"

namespace vlo {

/// Exact vertex-to-label distances with nearest witnesses, one multi-source
/// Dijkstra per label.
struct GroundTruth {
    std::vector<std::vector<Dist>> dist;      // [label][vertex]
    std::vector<std::vector<Vertex>> witness; // [label][vertex]

    Dist of(Vertex v, Label l) const { return dist[l][v]; }
    Vertex witnessOf(Vertex v, Label l) const { return witness[l][v]; }
};

GroundTruth computeGroundTruth(const LabeledGraph& g);

struct AuditReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> stats;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    void stat(const std::string& key, const std::string& value);
    void stat(const std::string& key, double value);
    void violation(const std::string& what);
    void merge(const AuditReport& other);

    // One machine-readable line: "AUDIT <name> pass=<0|1> k=v ..."
    std::string summaryLine() const;
    std::string detailed() const;
};

using QueryFn = std::function<QueryResult(Vertex, Label)>;

// Checks gt <= answer <= bound*gt for every finite ground-truth entry and
// that infinite entries get infinite answers. gt=0 queries must be exact.
AuditReport auditStretch(const LabeledGraph& g, const GroundTruth& gt,
                         const QueryFn& query, double bound,
                         const std::string& name);

// Replays every reported path edge by edge against the graph.
AuditReport auditPaths(const LabeledGraph& g, const GroundTruth& gt,
                       const QueryFn& pathQuery, const std::string& name);

// Probe-count sweep against a fixed bound (constant or per-query via bunch
// size); boundFn receives the queried vertex.
AuditReport auditProbes(const LabeledGraph& g, const QueryFn& query,
                        const std::function<double(Vertex)>& boundFn,
                        const std::string& name);

struct SizeBreakdown {
    std::vector<std::pair<std::string, std::size_t>> items;  // words per item
    std::size_t coreWords = 0;   // the items the size theorems account for
    std::size_t extraWords = 0;  // explicit pairwise paths (black-box sub)
};

struct PathReportingOracle;
struct TwoSidedOracle;

// Word accounting at 2 words per pivot / table entry / stored pair.
// Explicit pairwise path storage goes to extraWords.
SizeBreakdown sizeBreakdown(const PathReportingOracle& o);
SizeBreakdown sizeBreakdown(const TwoSidedOracle& o);

// coreWords <= maxConstant * k * n * l^{1/k}; reports the empirical constant.
AuditReport auditSize(const SizeBreakdown& sb, int k, Vertex n, Label l,
                      double maxConstant, const std::string& name);

// Certifies the minimal-index inequalities and their inductive bounds for
// every (v, nearest-witness) pair, the pivot-in-bunch property, and bunch
// statistics, against exact distances computed on demand.
AuditReport checkLemmas(const LabeledGraph& g, const Hierarchy& h,
                        const PivotTable& p, const BunchSet& b,
                        const GroundTruth& gt);

}  // namespace vlo
