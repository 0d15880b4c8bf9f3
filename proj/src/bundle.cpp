#include "vlo/bundle.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vlo {

namespace {

constexpr std::uint32_t kMagic = 0x564c4f42;  // "VLOB"

std::uint32_t tag(const char (&s)[5]) {
    return (std::uint32_t(s[0]) << 24) | (std::uint32_t(s[1]) << 16) |
           (std::uint32_t(s[2]) << 8) | std::uint32_t(s[3]);
}

class Writer {
public:
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) buf_.push_back(char((v >> (8 * i)) & 0xff));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) buf_.push_back(char((v >> (8 * i)) & 0xff));
    }
    void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
    void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
    void size(std::size_t v) { u64(v); }
    void section(std::uint32_t t) { u32(t); }
    std::string take() { return std::move(buf_); }

private:
    std::string buf_;
};

class Reader {
public:
    explicit Reader(const std::string& s) : s_(s) {}
    std::uint8_t u8() { return static_cast<std::uint8_t>(byte()); }
    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= std::uint32_t(byte()) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= std::uint64_t(byte()) << (8 * i);
        return v;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    double f64() { return std::bit_cast<double>(u64()); }
    std::size_t size() { return static_cast<std::size_t>(u64()); }
    void expect(std::uint32_t t) {
        if (u32() != t) throw std::runtime_error("bundle: bad section tag");
    }
    bool atEnd() const { return pos_ == s_.size(); }

private:
    unsigned char byte() {
        if (pos_ >= s_.size())
            throw std::runtime_error("bundle: truncated container");
        return static_cast<unsigned char>(s_[pos_++]);
    }
    const std::string& s_;
    std::size_t pos_ = 0;
};

template <typename F>
std::vector<std::pair<Vertex, Witness>> sortedEntries(
    const std::unordered_map<Vertex, Witness>& m, F) {
    std::vector<std::pair<Vertex, Witness>> v(m.begin(), m.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

void writeWitnessMap(Writer& w, const std::unordered_map<Vertex, Witness>& m) {
    auto entries = sortedEntries(m, 0);
    w.size(entries.size());
    for (const auto& [key, wit] : entries) {
        w.u32(key);
        w.u32(wit.vertex);
        w.f64(wit.dist);
    }
}

std::unordered_map<Vertex, Witness> readWitnessMap(Reader& r) {
    std::unordered_map<Vertex, Witness> m;
    const std::size_t n = r.size();
    m.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vertex key = r.u32();
        Witness wit;
        wit.vertex = r.u32();
        wit.dist = r.f64();
        m.emplace(key, wit);
    }
    return m;
}

void writeHierarchy(Writer& w, const Hierarchy& h) {
    w.section(tag("HIER"));
    w.i32(h.kRequested);
    w.i32(h.kEffective);
    w.f64(h.sampleProb);
    w.u64(h.seed);
    w.size(h.levels.size());
    for (const auto& level : h.levels) {
        w.size(level.size());
        for (Vertex v : level) w.u32(v);
    }
    w.size(h.levelOf.size());
    for (int x : h.levelOf) w.i32(x);
}

Hierarchy readHierarchy(Reader& r) {
    r.expect(tag("HIER"));
    Hierarchy h;
    h.kRequested = r.i32();
    h.kEffective = r.i32();
    h.sampleProb = r.f64();
    h.seed = r.u64();
    h.levels.resize(r.size());
    for (auto& level : h.levels) {
        level.resize(r.size());
        for (auto& v : level) v = r.u32();
    }
    h.levelOf.resize(r.size());
    for (auto& x : h.levelOf) x = r.i32();
    return h;
}

void writePivots(Writer& w, const PivotTable& p) {
    w.section(tag("PIVT"));
    w.i32(p.k);
    w.u32(p.n);
    for (Vertex v : p.pivot) w.u32(v);
    for (Dist d : p.pivotDist) w.f64(d);
}

PivotTable readPivots(Reader& r) {
    r.expect(tag("PIVT"));
    PivotTable p;
    p.k = r.i32();
    p.n = r.u32();
    const std::size_t total = static_cast<std::size_t>(p.k) * p.n;
    p.pivot.resize(total);
    for (auto& v : p.pivot) v = r.u32();
    p.pivotDist.resize(total);
    for (auto& d : p.pivotDist) d = r.f64();
    return p;
}

void writeBunches(Writer& w, const BunchSet& b) {
    w.section(tag("BNCH"));
    w.size(b.bunch.size());
    for (const auto& list : b.bunch) {
        w.size(list.size());
        for (const auto& e : list) {
            w.u32(e.vertex);
            w.f64(e.dist);
        }
    }
}

BunchSet readBunches(Reader& r) {
    r.expect(tag("BNCH"));
    BunchSet b;
    b.bunch.resize(r.size());
    for (auto& list : b.bunch) {
        list.resize(r.size());
        for (auto& e : list) {
            e.vertex = r.u32();
            e.dist = r.f64();
        }
    }
    return b;
}

void writeLabelBunch(Writer& w, const LabelBunch& lb) {
    w.section(tag("LBLB"));
    w.size(lb.table.size());
    for (const auto& t : lb.table) writeWitnessMap(w, t);
}

LabelBunch readLabelBunch(Reader& r) {
    r.expect(tag("LBLB"));
    LabelBunch lb;
    lb.table.resize(r.size());
    for (auto& t : lb.table) t = readWitnessMap(r);
    return lb;
}

void writeClusters(Writer& w, const ClusterForest& f) {
    w.section(tag("CLST"));
    w.size(f.trees.size());
    for (const auto& t : f.trees) {
        w.u32(t.root);
        w.size(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
            w.u32(t.vertices[i]);
            w.u32(t.parent[i]);
            w.f64(t.dist[i]);
        }
    }
    w.size(f.treeIndex.size());
    w.size(f.labelCluster.size());
    for (const auto& t : f.labelCluster) writeWitnessMap(w, t);
}

ClusterForest readClusters(Reader& r) {
    r.expect(tag("CLST"));
    ClusterForest f;
    f.trees.resize(r.size());
    for (auto& t : f.trees) {
        t.root = r.u32();
        const std::size_t n = r.size();
        t.vertices.resize(n);
        t.parent.resize(n);
        t.dist.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            t.vertices[i] = r.u32();
            t.parent[i] = r.u32();
            t.dist[i] = r.f64();
        }
    }
    f.treeIndex.assign(r.size(), -1);
    for (std::size_t i = 0; i < f.trees.size(); ++i)
        f.treeIndex[f.trees[i].root] = static_cast<std::int64_t>(i);
    f.labelCluster.resize(r.size());
    for (auto& t : f.labelCluster) t = readWitnessMap(r);
    return f;
}

void writePivotLabelTables(Writer& w, const PivotLabelTables& t) {
    w.section(tag("PLBT"));
    w.size(t.table.size());
    for (const auto& perLevel : t.table) {
        w.size(perLevel.size());
        for (const auto& m : perLevel) writeWitnessMap(w, m);
    }
}

PivotLabelTables readPivotLabelTables(Reader& r) {
    r.expect(tag("PLBT"));
    PivotLabelTables t;
    t.table.resize(r.size());
    for (auto& perLevel : t.table) {
        perLevel.resize(r.size());
        for (auto& m : perLevel) m = readWitnessMap(r);
    }
    return t;
}

void writeLastLevel(Writer& w, const LastLevelLabelDist& d) {
    w.section(tag("LLLD"));
    std::vector<Vertex> keys;
    keys.reserve(d.table.size());
    for (const auto& [u, row] : d.table) keys.push_back(u);
    std::sort(keys.begin(), keys.end());
    w.size(keys.size());
    for (Vertex u : keys) {
        const auto& row = d.table.at(u);
        w.u32(u);
        w.size(row.size());
        for (const auto& wit : row) {
            w.u32(wit.vertex);
            w.f64(wit.dist);
        }
    }
}

LastLevelLabelDist readLastLevel(Reader& r) {
    r.expect(tag("LLLD"));
    LastLevelLabelDist d;
    const std::size_t n = r.size();
    for (std::size_t i = 0; i < n; ++i) {
        Vertex u = r.u32();
        std::vector<Witness> row(r.size());
        for (auto& wit : row) {
            wit.vertex = r.u32();
            wit.dist = r.f64();
        }
        d.table.emplace(u, std::move(row));
    }
    return d;
}

void writePairSet(Writer& w, const PairSet& p) {
    w.section(tag("PAIR"));
    w.size(p.pairs.size());
    for (const auto& pr : p.pairs) {
        w.u32(pr.a);
        w.u32(pr.b);
        w.f64(pr.dist);
    }
    w.size(p.pivotFamilyCount);
    w.size(p.labelFamilyCount);
    w.size(p.familyCountBound);
}

PairSet readPairSet(Reader& r) {
    r.expect(tag("PAIR"));
    PairSet p;
    p.pairs.resize(r.size());
    for (auto& pr : p.pairs) {
        pr.a = r.u32();
        pr.b = r.u32();
        pr.dist = r.f64();
    }
    p.pivotFamilyCount = r.size();
    p.labelFamilyCount = r.size();
    p.familyCountBound = r.size();
    return p;
}

void writePairwise(Writer& w, const PairwisePathOracle& o) {
    w.section(tag("PWOR"));
    w.f64(o.stretch);
    w.size(o.entries.size());
    for (const auto& e : o.entries) {
        w.u32(e.a);
        w.u32(e.b);
        w.f64(e.length);
        w.size(e.path.size());
        for (Vertex v : e.path) w.u32(v);
    }
}

PairwisePathOracle readPairwise(Reader& r) {
    r.expect(tag("PWOR"));
    PairwisePathOracle o;
    o.stretch = r.f64();
    o.entries.resize(r.size());
    for (auto& e : o.entries) {
        e.a = r.u32();
        e.b = r.u32();
        e.length = r.f64();
        e.path.resize(r.size());
        for (auto& v : e.path) v = r.u32();
    }
    for (std::uint32_t i = 0; i < o.entries.size(); ++i)
        o.index.emplace(PairwisePathOracle::key(o.entries[i].a, o.entries[i].b),
                        i);
    return o;
}

void writeHeader(Writer& w, Bundle::Kind kind, std::uint64_t graphHash) {
    w.u32(kMagic);
    w.u32(1);  // version
    w.u64(graphHash);
    w.u8(static_cast<std::uint8_t>(kind));
}

}  // namespace

std::string serializeBundle(const PathReportingOracle& o) {
    Writer w;
    writeHeader(w, Bundle::Kind::PathReporting, o.graph->contentHash());
    w.u8(o.useClusterShortcut ? 1 : 0);
    writeHierarchy(w, o.hierarchy);
    writePivots(w, o.pivots);
    writeBunches(w, o.bunches);
    writeLabelBunch(w, o.labelBunch);
    writeClusters(w, o.clusters);
    writeLastLevel(w, o.lastLevel);
    writePairSet(w, o.pairs);
    writePairwise(w, o.pairwise);
    return w.take();
}

std::string serializeBundle(const TwoSidedOracle& o) {
    Writer w;
    writeHeader(w, Bundle::Kind::TwoSided, o.graph->contentHash());
    w.u8(o.pathReporting ? 1 : 0);
    writeHierarchy(w, o.hierarchy);
    writePivots(w, o.pivots);
    writeBunches(w, o.bunches);
    writeLabelBunch(w, o.labelBunch);
    writePivotLabelTables(w, o.pivotTables);
    writeLastLevel(w, o.lastLevel);
    if (o.pathReporting) {
        writeClusters(w, o.clusters);
        writePairSet(w, o.pairs);
        writePairwise(w, o.pairwise);
    }
    return w.take();
}

Bundle loadBundle(const std::string& bytes, const LabeledGraph& g) {
    Reader r(bytes);
    if (r.u32() != kMagic) throw std::runtime_error("bundle: bad magic");
    Bundle b;
    b.version = r.u32();
    if (b.version != 1) throw std::runtime_error("bundle: unsupported version");
    b.graphHash = r.u64();
    if (b.graphHash != g.contentHash())
        throw std::runtime_error(
            "bundle: graph content hash mismatch (bundle was built from a "
            "different graph)");
    b.kind = static_cast<Bundle::Kind>(r.u8());

    if (b.kind == Bundle::Kind::PathReporting) {
        PathReportingOracle o;
        o.graph = &g;
        o.useClusterShortcut = r.u8() != 0;
        o.hierarchy = readHierarchy(r);
        o.pivots = readPivots(r);
        o.bunches = readBunches(r);
        o.labelBunch = readLabelBunch(r);
        o.clusters = readClusters(r);
        o.lastLevel = readLastLevel(r);
        o.pairs = readPairSet(r);
        o.pairwise = readPairwise(r);
        b.pr = std::move(o);
    } else if (b.kind == Bundle::Kind::TwoSided) {
        TwoSidedOracle o;
        o.graph = &g;
        o.pathReporting = r.u8() != 0;
        o.hierarchy = readHierarchy(r);
        o.pivots = readPivots(r);
        o.bunches = readBunches(r);
        o.labelBunch = readLabelBunch(r);
        o.pivotTables = readPivotLabelTables(r);
        o.lastLevel = readLastLevel(r);
        if (o.pathReporting) {
            o.clusters = readClusters(r);
            o.pairs = readPairSet(r);
            o.pairwise = readPairwise(r);
        }
        b.ts = std::move(o);
    } else {
        throw std::runtime_error("bundle: unknown oracle kind");
    }
    if (!r.atEnd()) throw std::runtime_error("bundle: trailing bytes");
    return b;
}

void writeFile(const std::string& path, const std::string& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write file: " + path);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string readFile(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace vlo
