#include "vlo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vlo {

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

template <typename T>
std::uint64_t fnvValue(std::uint64_t h, T v) {
    return fnv1a(h, &v, sizeof(v));
}

[[noreturn]] void parseFail(std::size_t lineNo, const std::string& what) {
    throw std::runtime_error("graph parse error at line " +
                             std::to_string(lineNo) + ": " + what);
}

}  // namespace

LabeledGraph::LabeledGraph(Vertex n, Label numLabels, std::vector<Edge> edges,
                           std::vector<Label> labelOf)
    : n_(n), numLabels_(numLabels), labelOf_(std::move(labelOf)) {
    if (labelOf_.size() != n_)
        throw std::invalid_argument("label count does not match vertex count");
    for (Vertex v = 0; v < n_; ++v) {
        if (labelOf_[v] >= numLabels_)
            throw std::invalid_argument("label id out of range for vertex " +
                                     std::to_string(v));
    }
    for (auto& e : edges) {
        if (e.u >= n_ || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        if (!(e.w >= 0) || std::isnan(e.w))
            throw std::invalid_argument("negative weight on edge (" +
                                     std::to_string(e.u) + "," +
                                     std::to_string(e.v) + ")");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.w) < std::tie(b.u, b.v, b.w);
    });
    // Collapse parallel edges to the minimum weight.
    for (const auto& e : edges) {
        if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v)
            continue;  // sorted by weight within (u,v), first one is minimal
        edges_.push_back(e);
    }

    adj_.resize(n_);
    for (const auto& e : edges_) {
        adj_[e.u].emplace_back(e.v, e.w);
        adj_[e.v].emplace_back(e.u, e.w);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    byLabel_.resize(numLabels_);
    for (Vertex v = 0; v < n_; ++v) byLabel_[labelOf_[v]].push_back(v);

    std::uint64_t h = 0xcbf29ce484222325ULL;
    h = fnvValue(h, n_);
    h = fnvValue(h, numLabels_);
    for (Label l : labelOf_) h = fnvValue(h, l);
    for (const auto& e : edges_) {
        h = fnvValue(h, e.u);
        h = fnvValue(h, e.v);
        h = fnvValue(h, e.w);
    }
    hash_ = h;
}

Dist LabeledGraph::edgeWeight(Vertex u, Vertex v) const {
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(),
                               std::make_pair(v, -kInfDist));
    if (it != nb.end() && it->first == v) return it->second;
    return kInfDist;
}

LabeledGraph loadGraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;

    long long n = -1, m = -1, l = -1;
    std::vector<Label> labelOf;
    std::vector<char> haveLabel;
    std::vector<Edge> edges;
    std::size_t labelLines = 0, edgeLines = 0;

    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;  // blank

        if (n < 0) {
            // header
            try {
                n = std::stoll(tok);
            } catch (...) {
                parseFail(lineNo, "malformed header");
            }
            if (!(ls >> m >> l)) parseFail(lineNo, "malformed header");
            if (n < 0 || m < 0 || l < 1) parseFail(lineNo, "bad header values");
            std::string extra;
            if (ls >> extra) parseFail(lineNo, "trailing tokens in header");
            labelOf.assign(static_cast<std::size_t>(n), 0);
            haveLabel.assign(static_cast<std::size_t>(n), 0);
            continue;
        }

        if (tok == "label") {
            long long v, lab;
            if (!(ls >> v >> lab)) parseFail(lineNo, "malformed label line");
            if (v < 0 || v >= n) parseFail(lineNo, "vertex id out of range");
            if (lab < 0 || lab >= l) parseFail(lineNo, "label id out of range");
            if (haveLabel[v]) parseFail(lineNo, "duplicate label for vertex " +
                                                    std::to_string(v));
            labelOf[v] = static_cast<Label>(lab);
            haveLabel[v] = 1;
            ++labelLines;
        } else if (tok == "edge") {
            long long u, v;
            double w;
            if (!(ls >> u >> v >> w)) parseFail(lineNo, "malformed edge line");
            if (u < 0 || u >= n || v < 0 || v >= n)
                parseFail(lineNo, "vertex id out of range");
            if (u == v) parseFail(lineNo, "self-loop");
            if (w < 0 || std::isnan(w)) parseFail(lineNo, "negative weight");
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), w});
            ++edgeLines;
        } else {
            parseFail(lineNo, "unknown directive '" + tok + "'");
        }
    }

    if (n < 0) throw std::runtime_error("graph parse error: missing header");
    if (labelLines != static_cast<std::size_t>(n))
        throw std::runtime_error("graph parse error: expected " +
                                 std::to_string(n) + " label lines, got " +
                                 std::to_string(labelLines));
    for (long long v = 0; v < n; ++v)
        if (!haveLabel[v])
            throw std::runtime_error("graph parse error: missing label for vertex " +
                                     std::to_string(v));
    if (edgeLines != static_cast<std::size_t>(m))
        throw std::runtime_error("graph parse error: expected " +
                                 std::to_string(m) + " edge lines, got " +
                                 std::to_string(edgeLines));

    return LabeledGraph(static_cast<Vertex>(n), static_cast<Label>(l),
                        std::move(edges), std::move(labelOf));
}

LabeledGraph loadGraphFile(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return loadGraph(ss.str());
}

std::string formatGraph(const LabeledGraph& g) {
    std::ostringstream out;
    out << g.numVertices() << ' ' << g.numEdges() << ' ' << g.numLabels() << '\n';
    for (Vertex v = 0; v < g.numVertices(); ++v)
        out << "label " << v << ' ' << g.labelOf(v) << '\n';
    for (const auto& e : g.edges()) {
        out << "edge " << e.u << ' ' << e.v << ' ';
        if (e.w == static_cast<Dist>(static_cast<long long>(e.w)))
            out << static_cast<long long>(e.w);
        else
            out << e.w;
        out << '\n';
    }
    return out.str();
}

void saveGraphFile(const LabeledGraph& g, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write graph file: " + path);
    f << formatGraph(g);
}

}  // namespace vlo
