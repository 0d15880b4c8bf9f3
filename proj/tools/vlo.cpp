// Command-line front end: generate instances, build oracle bundles, answer
// queries, run the audit suite, and sweep benchmark grids.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vlo/bundle.hpp"
#include "vlo/generator.hpp"
#include "vlo/graph.hpp"
#include "vlo/pr_oracle.hpp"
#include "vlo/verifier.hpp"
#include "vlo/vl2k_oracle.hpp"

namespace {

using namespace vlo;

std::string fmtDist(Dist d) {
    if (d == kInfDist) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", d);
    return buf;
}

std::string fmtPath(const std::vector<Vertex>& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out << ',';
        out << p[i];
    }
    return out.str();
}

void printAnswer(Vertex v, Label l, const QueryResult& r, bool withPath) {
    std::cout << "v=" << v << " label=" << l << " dist=" << fmtDist(r.distance)
              << " phase=" << phaseName(r.phase) << " level=" << r.level
              << " probes=" << r.probes;
    if (withPath && r.path) std::cout << " path=" << fmtPath(*r.path);
    std::cout << "\n";
}

// The bundle's oracle holds a pointer into `graph`, so the graph must stay
// put once the bundle is loaded.
struct LoadedBundle {
    LabeledGraph graph;
    Bundle bundle;

    LoadedBundle(const std::string& graphPath, const std::string& bundlePath)
        : graph(loadGraphFile(graphPath)),
          bundle(loadBundle(readFile(bundlePath), graph)) {}
};

LoadedBundle loadPair(const std::string& graphPath,
                      const std::string& bundlePath) {
    return LoadedBundle(graphPath, bundlePath);
}

int runGen(const GenSpec& spec, const std::string& outPath) {
    LabeledGraph g = generate(spec);
    saveGraphFile(g, outPath);
    std::cout << "wrote " << outPath << " n=" << g.numVertices()
              << " m=" << g.numEdges() << " labels=" << g.numLabels() << "\n";
    return 0;
}

int runBuild(const std::string& graphPath, const std::string& outPath,
             const std::string& oracleKind, int k, std::uint64_t seed,
             bool shortcut, bool paths) {
    LabeledGraph g = loadGraphFile(graphPath);
    std::string bytes;
    if (oracleKind == "pr") {
        PathReportingOracle o = PathReportingOracle::build(g, k, seed, shortcut);
        bytes = serializeBundle(o);
        std::cout << "built pr oracle k=" << k
                  << " k_effective=" << o.kEffective() << " seed=" << seed
                  << " shortcut=" << (shortcut ? 1 : 0) << "\n";
    } else {
        TwoSidedOracle o = TwoSidedOracle::build(g, k, seed, paths);
        bytes = serializeBundle(o);
        std::cout << "built 2k1 oracle k=" << k
                  << " k_effective=" << o.kEffective() << " seed=" << seed
                  << " paths=" << (paths ? 1 : 0) << "\n";
    }
    writeFile(outPath, bytes);
    std::cout << "wrote " << outPath << " (" << bytes.size() << " bytes)\n";
    return 0;
}

QueryResult answerOne(const Bundle& b, Vertex v, Label l, bool withPath) {
    if (b.kind == Bundle::Kind::PathReporting)
        return withPath ? b.pr->queryPath(v, l) : b.pr->queryDistance(v, l);
    return withPath ? b.ts->queryPath(v, l) : b.ts->query(v, l);
}

int runQuery(const std::string& graphPath, const std::string& bundlePath,
             long long v, long long l, const std::string& batchPath,
             bool withPath) {
    LoadedBundle lb = loadPair(graphPath, bundlePath);
    if (withPath && lb.bundle.kind == Bundle::Kind::TwoSided &&
        !lb.bundle.ts->pathReporting) {
        std::cerr << "error: bundle was built without path reporting\n";
        return 2;
    }

    auto check = [&](long long qv, long long ql) {
        return qv >= 0 && qv < (long long)lb.graph.numVertices() && ql >= 0 &&
               ql < (long long)lb.graph.numLabels();
    };

    if (!batchPath.empty()) {
        std::ifstream in(batchPath);
        if (!in) {
            std::cerr << "error: cannot open " << batchPath << "\n";
            return 2;
        }
        std::string line;
        std::size_t lineNo = 0;
        while (std::getline(in, line)) {
            ++lineNo;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            long long qv, ql;
            if (!(ls >> qv)) continue;  // blank line
            if (!(ls >> ql) || !check(qv, ql)) {
                std::cerr << "error: bad query at line " << lineNo << "\n";
                return 2;
            }
            printAnswer((Vertex)qv, (Label)ql,
                        answerOne(lb.bundle, (Vertex)qv, (Label)ql, withPath),
                        withPath);
        }
        return 0;
    }

    if (!check(v, l)) {
        std::cerr << "error: vertex or label out of range\n";
        return 2;
    }
    printAnswer((Vertex)v, (Label)l,
                answerOne(lb.bundle, (Vertex)v, (Label)l, withPath), withPath);
    return 0;
}

int runAudit(const std::string& graphPath, const std::string& bundlePath,
             double sizeConstant) {
    LoadedBundle lb = loadPair(graphPath, bundlePath);
    const LabeledGraph& g = lb.graph;
    const Bundle& b = lb.bundle;
    GroundTruth gt = computeGroundTruth(g);

    std::vector<AuditReport> reports;
    if (b.kind == Bundle::Kind::PathReporting) {
        const PathReportingOracle& o = *b.pr;
        const int ke = o.kEffective();
        const double bound =
            std::max(1.0, o.useClusterShortcut ? 4.0 * ke - 5.0 : 4.0 * ke - 3.0);
        reports.push_back(auditStretch(
            g, gt, [&](Vertex v, Label l) { return o.queryDistance(v, l); },
            bound, "stretch"));
        reports.push_back(auditPaths(
            g, gt, [&](Vertex v, Label l) { return o.queryPath(v, l); },
            "paths"));
        reports.push_back(auditProbes(
            g, [&](Vertex v, Label l) { return o.queryDistance(v, l); },
            [&](Vertex) { return 2.0 * ke + 2.0; }, "probes"));
        reports.push_back(auditSize(sizeBreakdown(o), ke, g.numVertices(),
                                    g.numLabels(), sizeConstant, "size"));
        reports.push_back(
            checkLemmas(g, o.hierarchy, o.pivots, o.bunches, gt));
    } else {
        const TwoSidedOracle& o = *b.ts;
        const int ke = o.kEffective();
        const double bound = 2.0 * ke - 1.0;
        reports.push_back(auditStretch(
            g, gt, [&](Vertex v, Label l) { return o.query(v, l); }, bound,
            "stretch"));
        if (o.pathReporting)
            reports.push_back(auditPaths(
                g, gt, [&](Vertex v, Label l) { return o.queryPath(v, l); },
                "paths"));
        reports.push_back(auditProbes(
            g, [&](Vertex v, Label l) { return o.query(v, l); },
            [&](Vertex v) {
                return (ke - 1.0) + (double)o.bunches.bunch[v].size() + 1.0;
            },
            "probes"));
        reports.push_back(auditSize(sizeBreakdown(o), ke, g.numVertices(),
                                    g.numLabels(), sizeConstant, "size"));
        reports.push_back(
            checkLemmas(g, o.hierarchy, o.pivots, o.bunches, gt));
    }

    bool allPass = true;
    for (const auto& r : reports) {
        std::cout << r.detailed();
        allPass = allPass && r.passed();
    }
    for (const auto& r : reports) std::cout << r.summaryLine() << "\n";
    return allPass ? 0 : 1;
}

int runBench(const GenSpec& base, const std::string& oracleKind,
             std::vector<int> ks, std::vector<unsigned> labelCounts,
             int numSeeds) {
    if (ks.empty()) ks = {2};
    if (labelCounts.empty()) labelCounts = {base.numLabels};

    std::printf("%-6s %-7s %-6s %-12s %-11s %-11s %-11s\n", "k", "labels",
                "seeds", "mean_stretch", "max_stretch", "core_words",
                "mean_probes");
    bool ok = true;
    for (int k : ks) {
        for (unsigned l : labelCounts) {
            double sumStretch = 0, maxStretch = 0, sumProbes = 0, sumWords = 0;
            std::size_t samples = 0;
            for (int s = 0; s < numSeeds; ++s) {
                GenSpec spec = base;
                spec.numLabels = l;
                spec.seed = base.seed + (std::uint64_t)s;
                LabeledGraph g = generate(spec);
                GroundTruth gt = computeGroundTruth(g);

                QueryFn q;
                if (oracleKind == "pr") {
                    auto o = std::make_shared<PathReportingOracle>(
                        PathReportingOracle::build(g, k, spec.seed));
                    sumWords += (double)sizeBreakdown(*o).coreWords;
                    q = [o](Vertex v, Label lab) {
                        return o->queryDistance(v, lab);
                    };
                } else {
                    auto o = std::make_shared<TwoSidedOracle>(
                        TwoSidedOracle::build(g, k, spec.seed));
                    sumWords += (double)sizeBreakdown(*o).coreWords;
                    q = [o](Vertex v, Label lab) { return o->query(v, lab); };
                }
                for (Vertex v = 0; v < g.numVertices(); ++v)
                    for (Label lab = 0; lab < g.numLabels(); ++lab) {
                        const Dist exact = gt.of(v, lab);
                        const QueryResult r = q(v, lab);
                        sumProbes += r.probes;
                        if (exact == kInfDist || exact == 0) continue;
                        const double ratio = r.distance / exact;
                        sumStretch += ratio;
                        maxStretch = std::max(maxStretch, ratio);
                        ++samples;
                    }
            }
            const double queries =
                (double)numSeeds * base.n * l;  // probe denominator
            std::printf("%-6d %-7u %-6d %-12.4f %-11.4f %-11.0f %-11.3f\n", k,
                        l, numSeeds, samples ? sumStretch / samples : 1.0,
                        maxStretch, numSeeds ? sumWords / numSeeds : 0.0,
                        queries ? sumProbes / queries : 0.0);
            const double bound = oracleKind == "pr" ? std::max(1.0, 4.0 * k - 5.0)
                                                    : 2.0 * k - 1.0;
            if (maxStretch > bound) ok = false;
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-label approximate distance oracles"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph instance");
    std::string genConfig, genOut, genFamily = "uniform", genScheme = "uniform";
    GenSpec spec;
    gen->add_option("--config", genConfig, "key=value spec file");
    auto* optFamily = gen->add_option("--family", genFamily,
                                      "uniform|grid|path|star");
    auto* optN = gen->add_option("-n,--n", spec.n, "vertex count");
    auto* optM = gen->add_option("-m,--m", spec.m, "edge count (uniform)");
    auto* optW = gen->add_option("--wmax", spec.maxWeight, "max edge weight");
    auto* optL = gen->add_option("-l,--labels", spec.numLabels, "label count");
    auto* optScheme =
        gen->add_option("--scheme", genScheme, "uniform|clustered");
    auto* optSeed = gen->add_option("--seed", spec.seed, "rng seed");
    gen->add_option("-o,--output", genOut, "output graph file")->required();

    // build
    auto* build = app.add_subcommand("build", "build an oracle bundle");
    std::string bGraph, bOut, bOracle = "pr";
    int bK = 2;
    std::uint64_t bSeed = 0;
    bool bShortcut = true, bPaths = false;
    build->add_option("--graph", bGraph, "input graph file")->required();
    build->add_option("--oracle", bOracle, "pr|2k1")
        ->check(CLI::IsMember({"pr", "2k1"}));
    build->add_option("--k", bK, "hierarchy depth")->check(CLI::Range(1, 64));
    build->add_option("--seed", bSeed, "sampling seed");
    build->add_flag("--shortcut,!--no-shortcut", bShortcut,
                    "label-cluster shortcut (pr only)");
    build->add_flag("--paths", bPaths, "store path support (2k1 only)");
    build->add_option("-o,--output", bOut, "output bundle file")->required();

    // query
    auto* query = app.add_subcommand("query", "answer vertex-label queries");
    std::string qGraph, qBundle, qBatch;
    long long qV = -1, qL = -1;
    bool qPaths = false;
    query->add_option("--graph", qGraph, "graph file")->required();
    query->add_option("--bundle", qBundle, "bundle file")->required();
    query->add_option("-v,--vertex", qV, "query vertex");
    query->add_option("-l,--label", qL, "query label");
    query->add_option("--batch", qBatch, "file of 'v label' lines");
    query->add_flag("--paths", qPaths, "report paths");

    // audit
    auto* audit = app.add_subcommand("audit", "run the full audit suite");
    std::string aGraph, aBundle;
    double aConstant = 8.0;
    audit->add_option("--graph", aGraph, "graph file")->required();
    audit->add_option("--bundle", aBundle, "bundle file")->required();
    audit->add_option("--size-constant", aConstant,
                      "max constant for the size audit");

    // bench
    auto* bench = app.add_subcommand("bench", "sweep a parameter grid");
    GenSpec benchSpec;
    benchSpec.n = 500;
    benchSpec.m = 2000;
    benchSpec.maxWeight = 100;
    benchSpec.numLabels = 16;
    std::string benchOracle = "2k1", benchFamily = "uniform",
                benchScheme = "uniform";
    std::vector<int> benchKs;
    std::vector<unsigned> benchLabels;
    int benchSeeds = 10;
    bench->add_option("--oracle", benchOracle, "pr|2k1")
        ->check(CLI::IsMember({"pr", "2k1"}));
    bench->add_option("-n,--n", benchSpec.n, "vertex count");
    bench->add_option("-m,--m", benchSpec.m, "edge count");
    bench->add_option("--wmax", benchSpec.maxWeight, "max edge weight");
    bench->add_option("--family", benchFamily, "graph family");
    bench->add_option("--scheme", benchScheme, "label scheme");
    bench->add_option("--k", benchKs, "hierarchy depths to sweep");
    bench->add_option("--labels", benchLabels, "label counts to sweep");
    bench->add_option("--seeds", benchSeeds, "seeds per cell");
    bench->add_option("--seed", benchSpec.seed, "base seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) {
            if (!genConfig.empty()) {
                std::ifstream in(genConfig);
                if (!in) throw std::runtime_error("cannot open " + genConfig);
                std::ostringstream buf;
                buf << in.rdbuf();
                GenSpec fromFile = GenSpec::parse(buf.str());
                // Explicit flags override the config file.
                if (!*optFamily) genFamily = familyName(fromFile.family);
                if (!*optN) spec.n = fromFile.n;
                if (!*optM) spec.m = fromFile.m;
                if (!*optW) spec.maxWeight = fromFile.maxWeight;
                if (!*optL) spec.numLabels = fromFile.numLabels;
                if (!*optScheme) genScheme = schemeName(fromFile.scheme);
                if (!*optSeed) spec.seed = fromFile.seed;
            }
            spec.family = parseFamily(genFamily);
            spec.scheme = parseScheme(genScheme);
            return runGen(spec, genOut);
        }
        if (build->parsed())
            return runBuild(bGraph, bOut, bOracle, bK, bSeed, bShortcut,
                            bPaths);
        if (query->parsed()) {
            if (qBatch.empty() && (qV < 0 || qL < 0)) {
                std::cerr << "error: give --vertex and --label, or --batch\n";
                return 2;
            }
            return runQuery(qGraph, qBundle, qV, qL, qBatch, qPaths);
        }
        if (audit->parsed()) return runAudit(aGraph, aBundle, aConstant);
        if (bench->parsed()) {
            benchSpec.family = parseFamily(benchFamily);
            benchSpec.scheme = parseScheme(benchScheme);
            return runBench(benchSpec, benchOracle, benchKs, benchLabels,
                            benchSeeds);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
