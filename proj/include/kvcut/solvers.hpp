#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "kvcut/graph.hpp"
#include "kvcut/limits.hpp"

namespace kvcut {

enum class Objective {
    max_components,        // KVCP: maximize c(G, S)
    min_pairwise,          // CNP: minimize pairwise connectivity
    max_small_components,  // number of components of size <= threshold
};

std::string_view to_string(Objective o);

struct SolveConfig {
    /// Cardinality bound (floored) or, with `weighted`, bound on total weight.
    Weight budget = 0;
    bool weighted = false;
    Objective objective = Objective::max_components;
    std::size_t threshold = 0;
    std::size_t exhaustive_limit = default_exhaustive_limit();
    std::size_t edge_limit = default_edge_limit();
    bool parallel = true;
    std::optional<std::chrono::milliseconds> time_limit;

    static SolveConfig with_budget(std::size_t k) {
        SolveConfig cfg;
        cfg.budget = static_cast<std::int64_t>(k);
        return cfg;
    }

    /// floor(budget); throws InputError if negative.
    std::size_t cardinality() const;
};

struct VertexCutSolution {
    VertexSet set;
    std::size_t component_count = 0;
    std::uint64_t pairwise = 0;
    std::size_t small_components = 0;
    Weight budget_used = 0;
    bool optimal = true;
};

struct EdgeCutSolution {
    EdgeSet set;
    std::size_t component_count = 0;
    bool optimal = true;
};

/// Evaluates s on g. `threshold` feeds small_components; budget_used is the
/// total weight when `weighted`, otherwise |s|.
VertexCutSolution evaluate_vertex_cut(const Graph& g, const VertexSet& s, bool weighted = false,
                                      std::size_t threshold = 0);

/// True when sol respects the budget and its fields match re-evaluation.
bool is_consistent(const Graph& g, const SolveConfig& cfg, const VertexCutSolution& sol);
bool is_consistent(const Graph& g, std::size_t k, const EdgeCutSolution& sol);

/// Exhaustive search under cfg.objective and cfg.weighted. Ties: smaller |S|,
/// then lexicographically smallest. Throws CapacityError above the limit.
VertexCutSolution brute_force_vertex_cut(const Graph& g, const SolveConfig& cfg);

VertexCutSolution brute_force_kvcp(const Graph& g, const SolveConfig& cfg);
VertexCutSolution brute_force_kvcp_weighted(const Graph& g, const SolveConfig& cfg);
VertexCutSolution brute_force_cnp(const Graph& g, const SolveConfig& cfg);

/// Maximizes c(G, A) over |A| <= k edges. Throws CapacityError when |E|
/// exceeds cfg.edge_limit.
EdgeCutSolution brute_force_kcut(const Graph& g, const SolveConfig& cfg);

/// Depth-first branch and bound for KVCP (n <= 64). Pruning uses the
/// independence number as a global cap and, locally, the current count plus
/// the (deg-1) values of the best remaining candidates. With a time limit
/// the best solution found so far is returned with optimal = false.
VertexCutSolution branch_and_bound_kvcp(const Graph& g, const SolveConfig& cfg);

/// Repeatedly deletes the vertex with the largest immediate gain (ties by
/// id) while the gain is non-negative; returns the best prefix.
VertexCutSolution greedy_kvcp(const Graph& g, const SolveConfig& cfg);

}  // namespace kvcut
