#pragma once

#include <functional>

#include "kvcut/graph.hpp"

namespace kvcut {

/// Subgraph induced by `keep`, relabelled to 0..|keep|-1 in id order.
/// Weights are carried over.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Greedy shrinking of a failing instance: repeatedly drops a vertex, then
/// an edge, whenever the smaller graph still fails, until neither step
/// helps. `fails(g)` must hold on entry; the result still fails.
Graph shrink_counterexample(Graph g, const std::function<bool(const Graph&)>& fails);

}  // namespace kvcut
