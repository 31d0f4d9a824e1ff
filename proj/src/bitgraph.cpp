#include "kvcut/bitgraph.hpp"

#include <string>

#include "kvcut/error.hpp"

namespace kvcut {

BitGraph::BitGraph(const Graph& g) : n_(g.order()) {
    if (n_ > kMaskKernelLimit)
        throw CapacityError("mask kernel supports at most 64 vertices, graph has " + std::to_string(n_));
    all_ = n_ == kMaskKernelLimit ? ~Mask{0} : (Mask{1} << n_) - 1;
    for (const Edge& e : g.edges()) {
        adj_[e.u] |= bit(e.v);
        adj_[e.v] |= bit(e.u);
    }
}

Mask BitGraph::component_of(Mask seed, Mask alive) const {
    Mask comp = seed & alive;
    Mask frontier = comp;
    while (frontier != 0) {
        Mask next = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) next |= adj_[std::countr_zero(f)];
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
    }
    return comp;
}

std::size_t BitGraph::count_components(Mask alive) const {
    std::size_t count = 0;
    for_each_component(alive, [&count](Mask) { ++count; });
    return count;
}

std::uint64_t BitGraph::pairwise(Mask alive) const {
    std::uint64_t total = 0;
    for_each_component(alive, [&total](Mask comp) {
        const auto s = static_cast<std::uint64_t>(std::popcount(comp));
        total += s * (s - 1) / 2;
    });
    return total;
}

std::size_t BitGraph::count_small(Mask alive, std::size_t threshold) const {
    std::size_t count = 0;
    for_each_component(alive, [&](Mask comp) {
        if (static_cast<std::size_t>(std::popcount(comp)) <= threshold) ++count;
    });
    return count;
}

namespace {

// Branching on a maximum-degree vertex, with degree <= 1 vertices taken
// greedily and connected components solved independently.
std::size_t mis_connected(const BitGraph& g, Mask p);

std::size_t mis(const BitGraph& g, Mask p) {
    std::size_t total = 0;
    g.for_each_component(p, [&](Mask comp) { total += mis_connected(g, comp); });
    return total;
}

std::size_t mis_connected(const BitGraph& g, Mask p) {
    std::size_t taken = 0;
    for (;;) {
        if (p == 0) return taken;
        Vertex pick = 0;
        bool low = false;
        Vertex branch = 0;
        std::size_t best_deg = 0;
        for (Mask q = p; q != 0; q &= q - 1) {
            auto v = static_cast<Vertex>(std::countr_zero(q));
            std::size_t d = g.degree_in(v, p);
            if (d <= 1) {
                pick = v;
                low = true;
                break;
            }
            if (d > best_deg) {
                best_deg = d;
                branch = v;
            }
        }
        if (low) {
            p &= ~(g.adjacency(pick) | bit(pick));
            ++taken;
            continue;
        }
        std::size_t with = 1 + mis(g, p & ~(g.adjacency(branch) | bit(branch)));
        std::size_t without = mis(g, p & ~bit(branch));
        return taken + (with > without ? with : without);
    }
}

}  // namespace

std::size_t independence_number(const BitGraph& g, Mask candidates) { return mis(g, candidates & g.all()); }

}  // namespace kvcut
