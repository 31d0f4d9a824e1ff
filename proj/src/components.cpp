#include "kvcut/components.hpp"

#include <algorithm>
#include <deque>

namespace kvcut {

namespace {

// BFS labelling over the subgraph of alive vertices, skipping removed edges.
template <class EdgeFilter>
ComponentReport label_components(const Graph& g, const std::vector<char>& alive, EdgeFilter keep) {
    const std::size_t n = g.order();
    ComponentReport report;
    report.labels.assign(n, -1);
    std::deque<Vertex> queue;
    for (Vertex root = 0; root < n; ++root) {
        if (!alive[root] || report.labels[root] >= 0) continue;
        const auto label = static_cast<std::int32_t>(report.count++);
        std::size_t size = 0;
        report.labels[root] = label;
        queue.push_back(root);
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            ++size;
            for (Vertex w : g.neighbors(v)) {
                if (!alive[w] || report.labels[w] >= 0 || !keep(v, w)) continue;
                report.labels[w] = label;
                queue.push_back(w);
            }
        }
        report.sizes.push_back(size);
    }
    return report;
}

}  // namespace

ComponentReport components_after_vertex_deletion(const Graph& g, const VertexSet& s) {
    require_valid(g, s);
    std::vector<char> alive(g.order(), 1);
    for (Vertex v : s) alive[v] = 0;
    return label_components(g, alive, [](Vertex, Vertex) { return true; });
}

ComponentReport components_after_edge_deletion(const Graph& g, const EdgeSet& a) {
    require_valid(g, a);
    std::vector<char> alive(g.order(), 1);
    if (a.empty()) return label_components(g, alive, [](Vertex, Vertex) { return true; });
    return label_components(g, alive, [&a](Vertex v, Vertex w) { return !a.contains(Edge(v, w)); });
}

std::uint64_t pairwise_connectivity(const ComponentReport& report) {
    std::uint64_t total = 0;
    for (std::size_t s : report.sizes) total += static_cast<std::uint64_t>(s) * (s - 1) / 2;
    return total;
}

std::size_t count_small_components(const ComponentReport& report, std::size_t c) {
    return static_cast<std::size_t>(
        std::count_if(report.sizes.begin(), report.sizes.end(), [c](std::size_t s) { return s <= c; }));
}

}  // namespace kvcut
