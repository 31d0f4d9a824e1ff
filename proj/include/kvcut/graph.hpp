#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace kvcut {

using Vertex = std::uint32_t;
using Weight = boost::rational<std::int64_t>;

/// Undirected edge stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    bool contains(Vertex v) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    VertexSet with(Vertex v) const;
    VertexSet without(Vertex v) const;

    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<Vertex> members_;
};

/// Sorted, duplicate-free set of edges.
class EdgeSet {
public:
    EdgeSet() = default;
    EdgeSet(std::initializer_list<Edge> members);
    explicit EdgeSet(std::vector<Edge> members);

    bool contains(const Edge& e) const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Edge>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    auto operator<=>(const EdgeSet&) const = default;

private:
    std::vector<Edge> members_;
};

/// Immutable simple undirected graph on vertices 0..n-1 with non-negative
/// rational vertex weights (1 unless given). Edges are kept sorted.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, duplicate edges, out-of-range
    /// endpoints, negative weights, or a weight vector of the wrong length.
    Graph(std::size_t n, std::vector<Edge> edges, std::vector<Weight> weights = {});

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool has_edge(Vertex a, Vertex b) const;
    bool has_vertex(Vertex v) const { return v < order(); }

    /// Index of e in edges(), or size() if absent.
    std::size_t edge_index(const Edge& e) const;

    bool weighted() const { return !weights_.empty(); }
    Weight weight(Vertex v) const { return weights_.empty() ? Weight(1) : weights_[v]; }
    Weight total_weight(const VertexSet& s) const;

    Graph with_weights(std::vector<Weight> weights) const;
    Graph without_weights() const;

    /// Structural and weight equality; an unweighted graph equals the same
    /// graph with all weights explicitly 1.
    bool operator==(const Graph& other) const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<Weight> weights_;
};

/// Throws InputError unless every member is a vertex of g.
void require_valid(const Graph& g, const VertexSet& s);
/// Throws InputError unless every member is an edge of g.
void require_valid(const Graph& g, const EdgeSet& a);

}  // namespace kvcut
