#include "kvcut/recognition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "kvcut/bitgraph.hpp"
#include "kvcut/error.hpp"
#include "kvcut/limits.hpp"

namespace kvcut {

std::optional<TwoColoring> is_bipartite(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::uint8_t unset = 2;
    TwoColoring color(n, unset);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (color[root] != unset) continue;
        color[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (color[w] == unset) {
                    color[w] = static_cast<std::uint8_t>(1 - color[v]);
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

SplitPartition make_split_partition(const Graph& g, VertexSet v1, VertexSet v2) {
    require_valid(g, v1);
    require_valid(g, v2);
    if (v1.size() + v2.size() != g.order())
        throw InputError("split partition does not cover the vertex set");
    for (Vertex v : v1)
        if (v2.contains(v)) throw InputError("vertex " + std::to_string(v) + " is in both sides");
    std::vector<Vertex> nbrs;
    for (Vertex v : v1) {
        for (Vertex w : g.neighbors(v)) {
            if (v1.contains(w)) throw InputError("independent side contains edge " + std::to_string(v) +
                                                 " " + std::to_string(w));
            nbrs.push_back(w);
        }
    }
    const auto& c = v2.members();
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (!g.has_edge(c[i], c[j]))
                throw InputError("clique side misses edge " + std::to_string(c[i]) + " " +
                                 std::to_string(c[j]));
    return SplitPartition{std::move(v1), std::move(v2), VertexSet(std::move(nbrs))};
}

std::optional<SplitPartition> recognize_split(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    std::size_t m = 0;
    for (std::size_t i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) + 1 >= i) m = i;

    std::size_t head = 0;
    std::size_t tail = 0;
    for (std::size_t i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
    if (head != (m == 0 ? 0 : m * (m - 1)) + tail) return std::nullopt;

    std::vector<Vertex> clique(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(m));
    std::vector<Vertex> independent(order.begin() + static_cast<std::ptrdiff_t>(m), order.end());
    return make_split_partition(g, VertexSet(std::move(independent)), VertexSet(std::move(clique)));
}

std::size_t max_independent_set_size(const Graph& g, std::size_t limit) {
    if (g.order() > limit)
        throw CapacityError("independence number limited to " + std::to_string(limit) +
                            " vertices, graph has " + std::to_string(g.order()));
    BitGraph bg(g);
    return independence_number(bg, bg.all());
}

std::size_t max_independent_set_size(const Graph& g) {
    return max_independent_set_size(g, default_exhaustive_limit());
}

}  // namespace kvcut
