#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kvcut/graph.hpp"

namespace kvcut {

/// Connected components of a graph after deletions. Components are numbered
/// in order of their smallest vertex; deleted vertices carry label -1.
struct ComponentReport {
    std::size_t count = 0;
    std::vector<std::size_t> sizes;
    std::vector<std::int32_t> labels;
};

ComponentReport components_after_vertex_deletion(const Graph& g, const VertexSet& s);
ComponentReport components_after_edge_deletion(const Graph& g, const EdgeSet& a);

/// Number of vertex pairs still joined by a path: sum of size*(size-1)/2.
std::uint64_t pairwise_connectivity(const ComponentReport& report);

/// Number of components with at most c vertices.
std::size_t count_small_components(const ComponentReport& report, std::size_t c);

}  // namespace kvcut
