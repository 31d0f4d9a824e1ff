#include "kvcut/witness.hpp"

#include <vector>

namespace kvcut {

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    require_valid(g, keep);
    std::vector<std::int64_t> index(g.order(), -1);
    std::vector<Weight> weights;
    Vertex next = 0;
    for (Vertex v : keep) {
        index[v] = next++;
        if (g.weighted()) weights.push_back(g.weight(v));
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.emplace_back(static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v]));
    }
    return Graph(keep.size(), std::move(edges), std::move(weights));
}

Graph shrink_counterexample(Graph g, const std::function<bool(const Graph&)>& fails) {
    for (bool progress = true; progress;) {
        progress = false;
        for (Vertex drop = 0; drop < g.order() && !progress; ++drop) {
            std::vector<Vertex> keep;
            for (Vertex v = 0; v < g.order(); ++v)
                if (v != drop) keep.push_back(v);
            Graph smaller = induced_subgraph(g, VertexSet(std::move(keep)));
            if (fails(smaller)) {
                g = std::move(smaller);
                progress = true;
            }
        }
        for (std::size_t i = 0; i < g.size() && !progress; ++i) {
            std::vector<Edge> edges = g.edges();
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
            std::vector<Weight> weights;
            if (g.weighted())
                for (Vertex v = 0; v < g.order(); ++v) weights.push_back(g.weight(v));
            Graph smaller(g.order(), std::move(edges), std::move(weights));
            if (fails(smaller)) {
                g = std::move(smaller);
                progress = true;
            }
        }
    }
    return g;
}

}  // namespace kvcut
