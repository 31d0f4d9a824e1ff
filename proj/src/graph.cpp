#include "kvcut/graph.hpp"

#include <algorithm>
#include <string>

#include "kvcut/error.hpp"

namespace kvcut {

namespace {

std::string edge_text(const Edge& e) {
    return std::to_string(e.u) + " " + std::to_string(e.v);
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::with(Vertex v) const {
    VertexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
    if (it == out.members_.end() || *it != v) out.members_.insert(it, v);
    return out;
}

VertexSet VertexSet::without(Vertex v) const {
    VertexSet out = *this;
    auto it = std::lower_bound(out.members_.begin(), out.members_.end(), v);
    if (it != out.members_.end() && *it == v) out.members_.erase(it);
    return out;
}

EdgeSet::EdgeSet(std::initializer_list<Edge> members) : EdgeSet(std::vector<Edge>(members)) {}

EdgeSet::EdgeSet(std::vector<Edge> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool EdgeSet::contains(const Edge& e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
}

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::vector<Weight> weights)
    : edges_(std::move(edges)), adjacency_(n), weights_(std::move(weights)) {
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= n) throw InputError("edge " + edge_text(e) + " has an endpoint outside 0.." +
                                       std::to_string(n == 0 ? 0 : n - 1));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) throw InputError("duplicate edge " + edge_text(*dup));

    if (!weights_.empty()) {
        if (weights_.size() != n)
            throw InputError("expected " + std::to_string(n) + " weights, got " +
                             std::to_string(weights_.size()));
        for (std::size_t v = 0; v < n; ++v)
            if (weights_[v] < Weight(0)) throw InputError("negative weight on vertex " + std::to_string(v));
    }

    for (const Edge& e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a >= order() || b >= order()) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::size_t Graph::edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return edges_.size();
    return static_cast<std::size_t>(it - edges_.begin());
}

Weight Graph::total_weight(const VertexSet& s) const {
    Weight sum = 0;
    for (Vertex v : s) sum += weight(v);
    return sum;
}

Graph Graph::with_weights(std::vector<Weight> weights) const {
    return Graph(order(), edges_, std::move(weights));
}

Graph Graph::without_weights() const { return Graph(order(), edges_); }

bool Graph::operator==(const Graph& other) const {
    if (order() != other.order() || edges_ != other.edges_) return false;
    for (Vertex v = 0; v < order(); ++v)
        if (weight(v) != other.weight(v)) return false;
    return true;
}

void require_valid(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
}

void require_valid(const Graph& g, const EdgeSet& a) {
    for (const Edge& e : a)
        if (!g.has_edge(e.u, e.v)) throw InputError("edge " + edge_text(e) + " is not in the graph");
}

}  // namespace kvcut
