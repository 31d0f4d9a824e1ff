#include "kvcut/special_classes.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "kvcut/bitgraph.hpp"
#include "kvcut/components.hpp"
#include "kvcut/error.hpp"
#include "kvcut/limits.hpp"
#include "subset_search.hpp"

namespace kvcut {

namespace {

// Re-derives the partition from g so a stale or hand-made one is rejected.
void require_partition(const Graph& g, const SplitPartition& sp) {
    const SplitPartition checked = make_split_partition(g, sp.v1, sp.v2);
    if (checked.n_of_v1 != sp.n_of_v1) throw InputError("split partition: n_of_v1 is not N(v1)");
}

// Best deletion set S ⊆ V2 with |S| <= k for the component count.
VertexSet search_clique_side(const Graph& g, const SplitPartition& sp, std::size_t k, bool parallel) {
    const std::size_t limit = default_exhaustive_limit();
    if (sp.v2.size() > limit) {
        throw CapacityError("split search: |V2| = " + std::to_string(sp.v2.size()) + " exceeds the exhaustive limit " +
                            std::to_string(limit));
    }
    const BitGraph bg(g);
    const std::vector<Vertex> pool(sp.v2.begin(), sp.v2.end());
    const auto p = static_cast<unsigned>(pool.size());
    const auto r = static_cast<unsigned>(std::min<std::size_t>(k, p));

    auto make_eval = [&] {
        return [&](std::span<const unsigned> idx) -> std::optional<std::int64_t> {
            Mask del = 0;
            for (unsigned i : idx) del |= bit(pool[i]);
            return static_cast<std::int64_t>(bg.count_components(bg.all() & ~del));
        };
    };
    const auto best = detail::best_up_to(p, r, make_eval, parallel);
    std::vector<Vertex> chosen;
    for (unsigned i : best->indices) chosen.push_back(pool[i]);
    return VertexSet(std::move(chosen));
}

}  // namespace

VertexCutSolution solve_split(const Graph& g, const SplitPartition& sp, std::size_t k, bool parallel) {
    require_partition(g, sp);
    const std::size_t nv1 = sp.n_of_v1.size();

    if (k < nv1) {
        auto sol = evaluate_vertex_cut(g, search_clique_side(g, sp, k, parallel));
        sol.optimal = true;
        return sol;
    }

    // Case k >= |N(V1)|: every V1 vertex becomes isolated. Extra clique
    // deletions never add a component; taking the last clique vertex outside
    // N(V1) would remove one, so at least one of them is kept.
    std::vector<Vertex> s(sp.n_of_v1.begin(), sp.n_of_v1.end());
    std::vector<Vertex> rest;
    for (Vertex v : sp.v2) {
        if (!sp.n_of_v1.contains(v)) rest.push_back(v);
    }
    const std::size_t spare = rest.empty() ? 0 : rest.size() - 1;
    const std::size_t extra = std::min(k - nv1, spare);
    s.insert(s.end(), rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(extra));
    auto sol = evaluate_vertex_cut(g, VertexSet(std::move(s)));
    sol.optimal = true;
    return sol;
}

std::size_t best_within_clique_side(const Graph& g, const SplitPartition& sp, std::size_t k) {
    require_partition(g, sp);
    return components_after_vertex_deletion(g, search_clique_side(g, sp, k, true)).count;
}

EquivalenceReport check_cnp_equivalence(const Graph& g, const SplitPartition& sp, std::size_t k, std::size_t limit) {
    require_partition(g, sp);
    if (g.order() > std::min(limit, kMaskKernelLimit)) {
        throw CapacityError("equivalence check: n = " + std::to_string(g.order()) + " exceeds the exhaustive limit " +
                            std::to_string(std::min(limit, kMaskKernelLimit)));
    }
    const BitGraph bg(g);
    const auto n = static_cast<unsigned>(g.order());

    struct Row {
        Mask del;
        std::size_t count;
        std::uint64_t pairwise;
    };
    std::vector<Row> rows;
    detail::for_each_subset(n, static_cast<unsigned>(std::min<std::size_t>(k, n)), [&](std::span<const unsigned> idx) {
        const Mask del = detail::to_mask(idx);
        const Mask alive = bg.all() & ~del;
        rows.push_back({del, bg.count_components(alive), bg.pairwise(alive)});
    });

    EquivalenceReport rep;
    rep.k = k;
    rep.kvcp_optimum = 0;
    rep.cnp_optimum = UINT64_MAX;
    for (const Row& r : rows) {
        rep.kvcp_optimum = std::max(rep.kvcp_optimum, r.count);
        rep.cnp_optimum = std::min(rep.cnp_optimum, r.pairwise);
    }

    rep.every_cnp_optimal_is_kvcp_optimal = true;
    rep.every_kvcp_optimal_is_cnp_optimal = true;
    for (const Row& r : rows) {
        const bool kv = r.count == rep.kvcp_optimum;
        const bool cn = r.pairwise == rep.cnp_optimum;
        if (kv) rep.kvcp_optimal_sets.push_back(detail::to_vertex_set(r.del));
        if (cn) rep.cnp_optimal_sets.push_back(detail::to_vertex_set(r.del));
        if (kv && cn) {
            rep.some_cnp_optimal_is_kvcp_optimal = true;
            rep.some_kvcp_optimal_is_cnp_optimal = true;
        }
        if (cn && !kv) {
            rep.every_cnp_optimal_is_kvcp_optimal = false;
            if (!rep.cnp_only_witness) rep.cnp_only_witness = detail::to_vertex_set(r.del);
        }
        if (kv && !cn) {
            rep.every_kvcp_optimal_is_cnp_optimal = false;
            if (!rep.kvcp_only_witness) rep.kvcp_only_witness = detail::to_vertex_set(r.del);
        }
    }
    return rep;
}

std::optional<CompleteBipartiteSides> complete_bipartite_sides(const Graph& g) {
    const std::size_t n = g.order();
    if (g.size() == 0) {
        std::vector<Vertex> all(n);
        for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
        return CompleteBipartiteSides{VertexSet{}, VertexSet(std::move(all))};
    }
    const auto coloring = is_bipartite(g);
    if (!coloring) return std::nullopt;

    std::vector<Vertex> side[2];
    for (std::size_t v = 0; v < n; ++v) side[(*coloring)[v]].push_back(static_cast<Vertex>(v));
    // Any 2-coloring has |E| <= |A| * |B|, with equality exactly when every
    // cross pair is an edge (which also forces connectivity).
    if (g.size() != side[0].size() * side[1].size()) return std::nullopt;

    // Vertex 0 has color 0, so side[0] wins ties.
    const int small = side[1].size() < side[0].size() ? 1 : 0;
    return CompleteBipartiteSides{VertexSet(std::move(side[small])), VertexSet(std::move(side[1 - small]))};
}

VertexCutSolution solve_complete_bipartite(const Graph& g, std::size_t k) {
    const auto sides = complete_bipartite_sides(g);
    if (!sides) throw InputError("solve_complete_bipartite: graph is not complete bipartite");

    VertexSet s;
    if (sides->smaller.size() <= k) {
        s = sides->smaller;
    } else {
        const auto& m = sides->smaller.members();
        s = VertexSet(std::vector<Vertex>(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(k)));
    }
    auto sol = evaluate_vertex_cut(g, s);
    sol.optimal = true;
    return sol;
}

ResidualShape residual_shape(const Graph& g, const SplitPartition& sp, const VertexSet& s) {
    const ComponentReport rep = components_after_vertex_deletion(g, s);
    ResidualShape shape;
    std::int32_t big_label = -1;
    for (std::size_t i = 0; i < rep.sizes.size(); ++i) {
        if (rep.sizes[i] == 1) {
            ++shape.singletons;
        } else {
            ++shape.nontrivial_components;
            big_label = static_cast<std::int32_t>(i);
        }
    }
    bool big_has_clique = false;
    for (Vertex v : sp.v2) {
        if (s.contains(v)) continue;
        shape.clique_survives = true;
        if (big_label >= 0 && rep.labels[v] == big_label) big_has_clique = true;
    }
    shape.ok = shape.nontrivial_components == 0 || (shape.nontrivial_components == 1 && big_has_clique);
    return shape;
}

}  // namespace kvcut
