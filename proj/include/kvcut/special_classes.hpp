#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "kvcut/graph.hpp"
#include "kvcut/recognition.hpp"
#include "kvcut/solvers.hpp"

namespace kvcut {

/// Vertex-cut optimum on a split graph.
///
/// When k >= |N(V1)| the answer is closed form: delete N(V1) and up to
/// k - |N(V1)| further clique vertices (smallest ids first), keeping one clique
/// vertex outside N(V1) alive whenever there is one. Every V1 vertex then
/// ends up isolated and the clique remainder forms at most one more component.
///
/// When k < |N(V1)| the search runs over subsets of V2 only, maximizing the
/// component count (ties: smaller set, then lexicographic).
///
/// Throws InputError when sp is not a split partition of g, CapacityError if
/// |V2| exceeds the exhaustive limit.
VertexCutSolution solve_split(const Graph& g, const SplitPartition& sp, std::size_t k, bool parallel = true);

/// Optimal KVCP value over deletion sets S ⊆ V2 with |S| <= k, by exhaustive
/// search regardless of the case; used to test that the restriction is lossless.
std::size_t best_within_clique_side(const Graph& g, const SplitPartition& sp, std::size_t k);

struct EquivalenceReport {
    std::size_t k = 0;
    std::size_t kvcp_optimum = 0;
    std::uint64_t cnp_optimum = 0;
    std::vector<VertexSet> kvcp_optimal_sets;
    std::vector<VertexSet> cnp_optimal_sets;

    /// Some CNP-optimal set is KVCP-optimal (same statement read from the
    /// other side: some KVCP-optimal set is CNP-optimal).
    bool some_cnp_optimal_is_kvcp_optimal = false;
    bool some_kvcp_optimal_is_cnp_optimal = false;
    /// Every CNP-optimal set is KVCP-optimal, and vice versa.
    bool every_cnp_optimal_is_kvcp_optimal = false;
    bool every_kvcp_optimal_is_cnp_optimal = false;

    /// A CNP-optimal set that is not KVCP-optimal, and the converse.
    std::optional<VertexSet> cnp_only_witness;
    std::optional<VertexSet> kvcp_only_witness;

    bool holds_weak() const { return some_cnp_optimal_is_kvcp_optimal && some_kvcp_optimal_is_cnp_optimal; }
    bool holds_strong() const { return every_cnp_optimal_is_kvcp_optimal && every_kvcp_optimal_is_cnp_optimal; }
};

/// Enumerates every deletion set of size <= k and compares the sets of
/// optimal solutions of the component-count and pairwise objectives.
EquivalenceReport check_cnp_equivalence(const Graph& g, const SplitPartition& sp, std::size_t k,
                                        std::size_t limit = default_exhaustive_limit());

struct CompleteBipartiteSides {
    VertexSet smaller;
    VertexSet larger;
};

/// Sides of K_{n1,n2}, or nullopt if g is not complete bipartite. An edgeless
/// graph is K_{0,n}. Equal sides: `smaller` is the side holding the smallest id.
std::optional<CompleteBipartiteSides> complete_bipartite_sides(const Graph& g);

/// Closed form for K_{n1,n2}: if the smaller side fits in k, delete it and
/// leave the rest of the budget unused (count = larger side); otherwise
/// delete the k smallest ids of the smaller side (count = 1).
/// Throws InputError when g is not complete bipartite.
VertexCutSolution solve_complete_bipartite(const Graph& g, std::size_t k);

struct ResidualShape {
    std::size_t nontrivial_components = 0;
    std::size_t singletons = 0;
    /// Some vertex of V2 survives the deletion.
    bool clique_survives = false;
    /// At most one component of size >= 2, and when there is one it holds the
    /// surviving V2 vertices.
    bool ok = true;
};

ResidualShape residual_shape(const Graph& g, const SplitPartition& sp, const VertexSet& s);

}  // namespace kvcut
