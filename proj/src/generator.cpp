#include "vlo/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace vlo {

namespace {

// Bounded draw independent of std::uniform_int_distribution so generated
// corpora are stable across standard libraries.
std::uint64_t drawBelow(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

std::vector<Label> makeLabels(const GenSpec& spec, std::mt19937_64& rng) {
    const Vertex n = spec.n;
    const Label l = spec.numLabels;
    std::vector<Label> labels(n);
    if (spec.scheme == LabelScheme::Clustered) {
        // Contiguous id blocks, exactly l nonempty classes when n >= l.
        for (Vertex v = 0; v < n; ++v)
            labels[v] = static_cast<Label>(
                (static_cast<std::uint64_t>(v) * l) / n);
    } else {
        std::vector<Vertex> order(n);
        for (Vertex v = 0; v < n; ++v) order[v] = v;
        for (Vertex i = n; i > 1; --i)
            std::swap(order[i - 1], order[drawBelow(rng, i)]);
        for (Vertex i = 0; i < n; ++i) labels[order[i]] = i % l;
    }
    return labels;
}

Dist drawWeight(const GenSpec& spec, std::mt19937_64& rng) {
    return static_cast<Dist>(
        1 + drawBelow(rng, static_cast<std::uint64_t>(spec.maxWeight)));
}

}  // namespace

GraphFamily parseFamily(const std::string& s) {
    if (s == "uniform" || s == "uniform-random-edges")
        return GraphFamily::UniformRandomEdges;
    if (s == "grid") return GraphFamily::Grid;
    if (s == "path") return GraphFamily::Path;
    if (s == "star") return GraphFamily::Star;
    throw std::invalid_argument("unknown graph family: " + s);
}

LabelScheme parseScheme(const std::string& s) {
    if (s == "uniform") return LabelScheme::Uniform;
    if (s == "clustered") return LabelScheme::Clustered;
    throw std::invalid_argument("unknown label scheme: " + s);
}

const char* familyName(GraphFamily f) {
    switch (f) {
        case GraphFamily::UniformRandomEdges: return "uniform";
        case GraphFamily::Grid: return "grid";
        case GraphFamily::Path: return "path";
        case GraphFamily::Star: return "star";
    }
    return "?";
}

const char* schemeName(LabelScheme s) {
    return s == LabelScheme::Uniform ? "uniform" : "clustered";
}

GenSpec GenSpec::parse(const std::string& text) {
    GenSpec spec;
    std::istringstream in(text);
    std::string line;
    std::size_t lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        std::string key = line.substr(0, eq == std::string::npos ? 0 : eq);
        key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
        if (key.empty()) {
            if (line.find_first_not_of(" \t\r") != std::string::npos)
                throw std::runtime_error("gen spec parse error at line " +
                                         std::to_string(lineNo));
            continue;
        }
        std::string val = line.substr(eq + 1);
        val.erase(std::remove_if(val.begin(), val.end(), ::isspace), val.end());
        if (key == "family") spec.family = parseFamily(val);
        else if (key == "n") spec.n = static_cast<Vertex>(std::stoull(val));
        else if (key == "m") spec.m = std::stoull(val);
        else if (key == "wmax") spec.maxWeight = std::stoll(val);
        else if (key == "labels") spec.numLabels = static_cast<Label>(std::stoull(val));
        else if (key == "scheme") spec.scheme = parseScheme(val);
        else if (key == "seed") spec.seed = std::stoull(val);
        else
            throw std::runtime_error("gen spec parse error at line " +
                                     std::to_string(lineNo) + ": unknown key " +
                                     key);
    }
    return spec;
}

std::string GenSpec::format() const {
    std::ostringstream out;
    out << "family=" << familyName(family) << "\n"
        << "n=" << n << "\n"
        << "m=" << m << "\n"
        << "wmax=" << maxWeight << "\n"
        << "labels=" << numLabels << "\n"
        << "scheme=" << schemeName(scheme) << "\n"
        << "seed=" << seed << "\n";
    return out.str();
}

LabeledGraph generate(const GenSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
    if (spec.numLabels < 1)
        throw std::invalid_argument("generator: labels must be >= 1");
    if (spec.maxWeight < 1)
        throw std::invalid_argument("generator: wmax must be >= 1");

    const Vertex n = spec.n;
    std::mt19937_64 rng(spec.seed);
    std::vector<Edge> edges;

    switch (spec.family) {
        case GraphFamily::Path:
            for (Vertex v = 0; v + 1 < n; ++v)
                edges.push_back({v, v + 1, drawWeight(spec, rng)});
            break;
        case GraphFamily::Star:
            for (Vertex v = 1; v < n; ++v)
                edges.push_back({0, v, drawWeight(spec, rng)});
            break;
        case GraphFamily::Grid: {
            const Vertex rows =
                std::max<Vertex>(1, static_cast<Vertex>(std::sqrt(double(n))));
            const Vertex cols = (n + rows - 1) / rows;
            for (Vertex v = 0; v < n; ++v) {
                const Vertex r = v / cols, c = v % cols;
                if (c + 1 < cols && v + 1 < n)
                    edges.push_back({v, v + 1, drawWeight(spec, rng)});
                if (v + cols < n)
                    edges.push_back({v, v + cols, drawWeight(spec, rng)});
                (void)r;
            }
            break;
        }
        case GraphFamily::UniformRandomEdges: {
            const std::size_t maxEdges =
                static_cast<std::size_t>(n) * (n - 1) / 2;
            if (spec.m > maxEdges)
                throw std::invalid_argument(
                    "generator: m exceeds simple-graph capacity");
            std::unordered_set<std::uint64_t> seen;
            while (edges.size() < spec.m) {
                const Vertex u = static_cast<Vertex>(drawBelow(rng, n));
                const Vertex v = static_cast<Vertex>(drawBelow(rng, n));
                if (u == v) continue;
                const Vertex a = std::min(u, v), b = std::max(u, v);
                const std::uint64_t key = (std::uint64_t(a) << 32) | b;
                if (!seen.insert(key).second) continue;
                edges.push_back({a, b, drawWeight(spec, rng)});
            }
            break;
        }
    }

    std::vector<Label> labels = makeLabels(spec, rng);
    return LabeledGraph(n, spec.numLabels, std::move(edges), std::move(labels));
}

}  // namespace vlo
