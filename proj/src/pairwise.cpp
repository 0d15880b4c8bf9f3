#include "vlo/pairwise.hpp"

#include <algorithm>
#include <stdexcept>

#include "vlo/dijkstra.hpp"

namespace vlo {

std::uint64_t PairwisePathOracle::key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool PairwisePathOracle::hasPair(Vertex a, Vertex b) const {
    return index.count(key(a, b)) != 0;
}

PairwisePathOracle::Answer PairwisePathOracle::query(Vertex a, Vertex b) const {
    auto it = index.find(key(a, b));
    if (it == index.end())
        throw std::runtime_error("pairwise oracle: pair (" + std::to_string(a) +
                                 "," + std::to_string(b) + ") not stored");
    const Entry& e = entries[it->second];
    Answer ans{e.length, e.path};
    if (a != e.a) std::reverse(ans.path.begin(), ans.path.end());
    return ans;
}

Dist PairwisePathOracle::lengthOf(Vertex a, Vertex b) const {
    auto it = index.find(key(a, b));
    if (it == index.end())
        throw std::runtime_error("pairwise oracle: pair (" + std::to_string(a) +
                                 "," + std::to_string(b) + ") not stored");
    return entries[it->second].length;
}

std::size_t PairwisePathOracle::pairWords() const { return 2 * entries.size(); }

std::size_t PairwisePathOracle::pathWords() const {
    std::size_t s = 0;
    for (const auto& e : entries) s += e.path.size();
    return s;
}

PairwisePathOracle buildExactPairwise(const LabeledGraph& g,
                                      const PairSet& pairs) {
    PairwisePathOracle o;
    o.stretch = 1.0;
    o.entries.reserve(pairs.pairs.size());

    // One Dijkstra per distinct smaller endpoint serves all its pairs.
    std::size_t i = 0;
    while (i < pairs.pairs.size()) {
        const Vertex a = pairs.pairs[i].a;
        SsspResult r = dijkstra(g, a);
        for (; i < pairs.pairs.size() && pairs.pairs[i].a == a; ++i) {
            const Vertex b = pairs.pairs[i].b;
            if (!r.reachable(b))
                throw std::runtime_error(
                    "pairwise oracle build: disconnected pair (" +
                    std::to_string(a) + "," + std::to_string(b) + ")");
            o.entries.push_back({a, b, r.dist[b], r.pathTo(b)});
        }
    }
    for (std::uint32_t j = 0; j < o.entries.size(); ++j)
        o.index.emplace(PairwisePathOracle::key(o.entries[j].a, o.entries[j].b),
                        j);
    return o;
}

}  // namespace vlo
