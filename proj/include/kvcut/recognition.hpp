#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kvcut/graph.hpp"

namespace kvcut {

/// Color (0 or 1) per vertex.
using TwoColoring = std::vector<std::uint8_t>;

/// BFS 2-coloring, each component rooted at its smallest vertex with color 0.
/// Empty when the graph has an odd cycle.
std::optional<TwoColoring> is_bipartite(const Graph& g);

/// Split decomposition: v1 independent, v2 a clique, n_of_v1 = N(v1) ⊆ v2.
struct SplitPartition {
    VertexSet v1;
    VertexSet v2;
    VertexSet n_of_v1;

    bool operator==(const SplitPartition&) const = default;
};

/// Degree-sequence recognition. Vertices are ordered by non-increasing degree
/// (ties by id), m = max{i : d_i >= i-1}; the graph is split iff
/// sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i, and then the first m vertices are v2.
std::optional<SplitPartition> recognize_split(const Graph& g);

/// Builds N(v1) and checks the partition against g; throws InputError if
/// v1/v2 do not partition V, v1 is not independent, or v2 is not a clique.
SplitPartition make_split_partition(const Graph& g, VertexSet v1, VertexSet v2);

/// Exact independence number. Throws CapacityError when n > limit.
std::size_t max_independent_set_size(const Graph& g, std::size_t limit);
std::size_t max_independent_set_size(const Graph& g);

}  // namespace kvcut
