#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

#include "kvcut/graph.hpp"
#include "kvcut/limits.hpp"

namespace kvcut {

using Mask = std::uint64_t;

inline constexpr Mask bit(Vertex v) { return Mask{1} << v; }

/// Adjacency bitmasks of a graph with at most 64 vertices. This is the
/// evaluation kernel behind every exhaustive search.
class BitGraph {
public:
    /// Throws CapacityError when g has more than 64 vertices.
    explicit BitGraph(const Graph& g);

    std::size_t order() const { return n_; }
    Mask all() const { return all_; }
    Mask adjacency(Vertex v) const { return adj_[v]; }
    std::size_t degree_in(Vertex v, Mask alive) const {
        return static_cast<std::size_t>(std::popcount(adj_[v] & alive));
    }

    /// Flood fill from the lowest vertex of `seed` inside `alive`.
    Mask component_of(Mask seed, Mask alive) const;

    /// Calls f(component_mask) for each component of the subgraph induced by
    /// `alive`, in order of smallest vertex.
    template <class F>
    void for_each_component(Mask alive, F&& f) const {
        Mask rest = alive;
        while (rest != 0) {
            Mask comp = component_of(rest & (~rest + 1), rest);
            f(comp);
            rest &= ~comp;
        }
    }

    std::size_t count_components(Mask alive) const;
    std::uint64_t pairwise(Mask alive) const;
    std::size_t count_small(Mask alive, std::size_t threshold) const;

private:
    std::size_t n_ = 0;
    Mask all_ = 0;
    std::array<Mask, kMaskKernelLimit> adj_{};
};

/// Exact independence number of the subgraph induced by `candidates`.
std::size_t independence_number(const BitGraph& g, Mask candidates);

}  // namespace kvcut
