#include <doctest.h>

#include "kvcut/components.hpp"
#include "kvcut/error.hpp"
#include "kvcut/generate.hpp"
#include "kvcut/recognition.hpp"
#include "kvcut/special_classes.hpp"
#include "oracles.hpp"

using namespace kvcut;

namespace {

// Clique {0,1,2,3}; independent {4,5,6} with N = {0,1}.
Graph case_one_graph() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {0, 6}, {1, 6}});
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    return generate(GraphKind::complete_bipartite, {.n1 = a, .n2 = b}, 0);
}

Graph random_split(Rng& rng, std::size_t max_n) {
    const std::size_t n = rng.between(1, max_n);
    GenParams p;
    p.n2 = rng.between(1, n);
    p.n1 = n - p.n2;
    p.p = static_cast<double>(rng.between(1, 9)) / 10.0;
    p.relabel = true;
    return generate(GraphKind::split, p, rng.next());
}

}  // namespace

TEST_CASE("split solver, k at least |N(V1)|") {
    const Graph g = case_one_graph();
    const auto sp = make_split_partition(g, {4, 5, 6}, {0, 1, 2, 3});
    REQUIRE(sp.n_of_v1 == VertexSet{0, 1});
    const auto sol = solve_split(g, sp, 3);
    CHECK(sol.component_count == 4);
    CHECK(sol.set == VertexSet{0, 1, 2});
    // Three isolated independent vertices plus the one clique vertex left.
    const auto report = components_after_vertex_deletion(g, sol.set);
    CHECK(report.sizes == std::vector<std::size_t>{1, 1, 1, 1});
    CHECK(sol.pairwise == 0);
    CHECK(sol.component_count == oracle::best_kvcp(g, 3));

    SUBCASE("spare budget never deletes the last clique vertex") {
        const auto big = solve_split(g, sp, 6);
        CHECK(big.component_count == 4);
        CHECK(big.set == VertexSet{0, 1, 2});
    }
    SUBCASE("N(V1) = V2 leaves only the independent side") {
        const Graph h(4, {{0, 1}, {0, 2}, {1, 3}});
        const auto hp = make_split_partition(h, {2, 3}, {0, 1});
        const auto s = solve_split(h, hp, 2);
        CHECK(s.component_count == 2);
        CHECK(s.set == VertexSet{0, 1});
    }
}

TEST_CASE("split solver, zero budget") {
    const Graph g = case_one_graph();
    const auto sp = *recognize_split(g);
    CHECK(solve_split(g, sp, 0).component_count == 1);
    CHECK(solve_split(g, sp, 0).set.empty());
}

TEST_CASE("split solver matches the unrestricted oracle") {
    Rng rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        const Graph g = random_split(rng, 10);
        const auto sp = recognize_split(g);
        REQUIRE(sp);
        for (std::size_t k = 0; k <= g.order(); ++k) {
            const std::size_t best = oracle::best_kvcp(g, k);
            const auto sol = solve_split(g, *sp, k, trial % 2 == 0);
            REQUIRE(sol.component_count == best);
            CHECK(components_after_vertex_deletion(g, sol.set).count == sol.component_count);
            CHECK(sol.set.size() <= k);
            CHECK(best_within_clique_side(g, *sp, k) == best);
            for (Vertex v : sol.set) {
                if (k < sp->n_of_v1.size()) CHECK(sp->v2.contains(v));
            }
        }
    }
}

TEST_CASE("split solver rejects an inconsistent partition") {
    const Graph g = case_one_graph();
    SplitPartition bad = make_split_partition(g, {4, 5, 6}, {0, 1, 2, 3});
    bad.n_of_v1 = VertexSet{0};
    CHECK_THROWS_AS(solve_split(g, bad, 2), InputError);
    SplitPartition swapped{VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6}, VertexSet{}};
    CHECK_THROWS_AS(solve_split(g, swapped, 2), InputError);
}

TEST_CASE("CNP and KVCP optima on split graphs") {
    SUBCASE("the k >= |N(V1)| instance") {
        const Graph g = case_one_graph();
        const auto rep = check_cnp_equivalence(g, *recognize_split(g), 3);
        CHECK(rep.kvcp_optimum == oracle::best_kvcp(g, 3));
        CHECK(rep.cnp_optimum == oracle::best_cnp(g, 3));
        CHECK(rep.some_cnp_optimal_is_kvcp_optimal);
        CHECK(rep.some_kvcp_optimal_is_cnp_optimal);
        CHECK(rep.holds_weak());
    }
    SUBCASE("stars") {
        for (std::size_t n = 2; n <= 7; ++n) {
            const Graph g = generate(GraphKind::star, {.n = n}, 0);
            const auto sp = recognize_split(g);
            REQUIRE(sp);
            CHECK(sp->v2.contains(0));
            for (std::size_t k = 1; k <= n; ++k) CHECK(check_cnp_equivalence(g, *sp, k).holds_weak());
        }
    }
    SUBCASE("strong reading fails on ties") {
        // On a star with k = 2, CNP is also optimal after deleting the hub and
        // a leaf, which loses a component.
        const Graph g = generate(GraphKind::star, {.n = 4}, 0);
        const auto rep = check_cnp_equivalence(g, *recognize_split(g), 2);
        CHECK_FALSE(rep.every_cnp_optimal_is_kvcp_optimal);
        REQUIRE(rep.cnp_only_witness);
        CHECK(rep.cnp_only_witness->size() == 2);
        CHECK(rep.holds_weak());
    }
    SUBCASE("optimal sets agree with the oracle") {
        Rng rng(59);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph g = random_split(rng, 8);
            const auto sp = *recognize_split(g);
            const std::size_t k = rng.between(0, g.order());
            const auto rep = check_cnp_equivalence(g, sp, k);
            CHECK(rep.kvcp_optimum == oracle::best_kvcp(g, k));
            CHECK(rep.cnp_optimum == oracle::best_cnp(g, k));
            for (const VertexSet& s : rep.kvcp_optimal_sets) CHECK(components_after_vertex_deletion(g, s).count == rep.kvcp_optimum);
            for (const VertexSet& s : rep.cnp_optimal_sets)
                CHECK(pairwise_connectivity(components_after_vertex_deletion(g, s)) == rep.cnp_optimum);
        }
    }
    CHECK_THROWS_AS(check_cnp_equivalence(case_one_graph(), *recognize_split(case_one_graph()), 2, 5), CapacityError);
}

TEST_CASE("complete bipartite closed form") {
    SUBCASE("examples") {
        const auto a = solve_complete_bipartite(complete_bipartite(2, 3), 2);
        CHECK(a.component_count == 3);
        CHECK(a.set == VertexSet{0, 1});
        CHECK(solve_complete_bipartite(complete_bipartite(3, 3), 2).component_count == 1);
        CHECK(solve_complete_bipartite(complete_bipartite(1, 6), 1).component_count == 6);
    }
    SUBCASE("leftover budget is not spent") {
        const auto s = solve_complete_bipartite(complete_bipartite(2, 4), 5);
        CHECK(s.set.size() == 2);
        CHECK(s.component_count == 4);
    }
    SUBCASE("equal sides delete the side holding the smallest id") {
        const auto s = solve_complete_bipartite(complete_bipartite(3, 3), 3);
        CHECK(s.set == VertexSet{0, 1, 2});
        const Graph relabelled = generate(GraphKind::complete_bipartite, {.n1 = 3, .n2 = 3, .relabel = true}, 5);
        const auto sides = *complete_bipartite_sides(relabelled);
        CHECK(sides.smaller.contains(0));
    }
    SUBCASE("small budget deletes the smallest ids of the smaller side") {
        const Graph g = generate(GraphKind::complete_bipartite, {.n1 = 5, .n2 = 3, .relabel = true}, 9);
        const auto sides = *complete_bipartite_sides(g);
        const auto s = solve_complete_bipartite(g, 2);
        CHECK(s.set == VertexSet{sides.smaller.members()[0], sides.smaller.members()[1]});
        CHECK(s.component_count == 1);
    }
    SUBCASE("matches brute force on every K_{a,b} up to 9 vertices") {
        for (std::size_t a = 0; a <= 9; ++a)
            for (std::size_t b = 0; a + b <= 9; ++b) {
                const Graph g = generate(GraphKind::complete_bipartite, {.n1 = a, .n2 = b, .relabel = true}, a * 10 + b);
                for (std::size_t k = 0; k <= a + b; ++k)
                    CHECK(solve_complete_bipartite(g, k).component_count == oracle::best_kvcp(g, k));
            }
    }
    SUBCASE("recognition") {
        CHECK_FALSE(complete_bipartite_sides(generate(GraphKind::path, {.n = 4}, 0)));
        CHECK(complete_bipartite_sides(generate(GraphKind::path, {.n = 3}, 0)));
        CHECK_FALSE(complete_bipartite_sides(Graph(4, {{0, 1}, {2, 3}})));
        CHECK_FALSE(complete_bipartite_sides(Graph(3, {{1, 2}})));
        CHECK(complete_bipartite_sides(Graph(3, {}))->larger.size() == 3);
        CHECK_THROWS_AS(solve_complete_bipartite(generate(GraphKind::cycle, {.n = 5}, 0), 1), InputError);
    }
}

TEST_CASE("residual shape of split graphs") {
    const Graph g = case_one_graph();
    const auto sp = *recognize_split(g);
    const auto whole = residual_shape(g, sp, {});
    CHECK(whole.ok);
    CHECK(whole.nontrivial_components == 1);
    CHECK(whole.singletons == 0);
    const auto no_clique = residual_shape(g, sp, sp.v2);
    CHECK(no_clique.ok);
    CHECK_FALSE(no_clique.clique_survives);
    CHECK(no_clique.nontrivial_components == 0);
    CHECK(no_clique.singletons == 3);

    Rng rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph h = random_split(rng, 8);
        const auto hp = *recognize_split(h);
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << h.order()); ++m) {
            std::vector<Vertex> s;
            for (Vertex v = 0; v < h.order(); ++v)
                if ((m >> v) & 1u) s.push_back(v);
            const auto shape = residual_shape(h, hp, VertexSet(s));
            CHECK(shape.ok);
            // Independent check: at most one component of size >= 2.
            std::size_t big = 0;
            for (std::size_t size : oracle::component_sizes(h, oracle::flags(h.order(), m))) big += size >= 2 ? 1 : 0;
            CHECK(big <= 1);
            CHECK(big == shape.nontrivial_components);
        }
    }
    // A non-split graph with two edges far apart is flagged.
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    const SplitPartition fake{VertexSet{0, 2}, VertexSet{1, 3}, VertexSet{1, 3}};
    CHECK_FALSE(residual_shape(two_edges, fake, {}).ok);
}
