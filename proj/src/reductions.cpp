#include "kvcut/reductions.hpp"

#include <algorithm>
#include <string>

#include "kvcut/components.hpp"
#include "kvcut/error.hpp"
#include "kvcut/recognition.hpp"
#include "kvcut/solvers.hpp"
#include "subset_search.hpp"

namespace kvcut {

std::string_view to_string(GadgetVariant v) {
    switch (v) {
        case GadgetVariant::reinforced: return "reinforced";
        case GadgetVariant::subdivided_aux: return "subdivided";
        case GadgetVariant::literal_aux: return "literal";
    }
    return "unknown";
}

std::optional<GadgetVariant> parse_gadget_variant(std::string_view name) {
    for (auto v : {GadgetVariant::reinforced, GadgetVariant::subdivided_aux, GadgetVariant::literal_aux})
        if (name == to_string(v)) return v;
    return std::nullopt;
}

Edge GadgetInstance::edge_of(Vertex x) const {
    auto it = std::lower_bound(u_of_edge.begin(), u_of_edge.end(), x);
    if (it == u_of_edge.end() || *it != x)
        throw PreconditionError("vertex " + std::to_string(x) + " is not a U vertex");
    return origin.edges()[static_cast<std::size_t>(it - u_of_edge.begin())];
}

namespace {

struct Sizes {
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

// Closed-form size of the gadget, independent of the construction loop.
Sizes expected_size(const Graph& g, std::size_t k, GadgetVariant variant) {
    const std::size_t n = g.order();
    const std::size_t m = g.size();
    std::size_t chains = 0;
    std::size_t chain_degree = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) >= 2) {
            ++chains;
            chain_degree += g.degree(v);
        }
    }
    Sizes s;
    if (variant == GadgetVariant::reinforced) {
        // Blob K_{k+1,k} per chain; U vertices see every plain vertex of both ends.
        s.vertices = n + m + 2 * chains * k;
        s.edges = chains * k * (k + 1) + (k + 1) * chain_degree + (2 * m - chain_degree);
        return s;
    }
    s.vertices = n + m + 2 * chains * (k - 1);
    s.edges = 2 * m + 2 * chains * (k - 1);
    if (k >= 2) {
        const std::size_t direct = chains * (k - 2);  // v_i x_{i+1}
        const std::size_t same_class = chain_degree + chains * (k - 1);  // x x1 and v v_i
        if (variant == GadgetVariant::subdivided_aux) {
            s.vertices += same_class;
            s.edges += 2 * same_class + direct;
        } else {
            s.edges += same_class + direct;
        }
    }
    return s;
}

class Builder {
public:
    Vertex add(GadgetRole role, std::int32_t owner) {
        role_.push_back(role);
        owner_.push_back(owner);
        return static_cast<Vertex>(role_.size() - 1);
    }

    void edge(Vertex a, Vertex b) { edges_.emplace_back(a, b); }

    // Plain/original vertices and subdivision vertices form the two classes
    // of the graph after step 3.
    bool plain_class(Vertex v) const {
        return role_[v] == GadgetRole::original || role_[v] == GadgetRole::chain;
    }

    void link(Vertex a, Vertex b, std::int32_t owner, bool subdivide_same_class) {
        if (subdivide_same_class && plain_class(a) == plain_class(b)) {
            Vertex y = add(GadgetRole::aux, owner);
            edge(a, y);
            edge(y, b);
        } else {
            edge(a, b);
        }
    }

    std::vector<GadgetRole> role_;
    std::vector<std::int32_t> owner_;
    std::vector<Edge> edges_;
};

}  // namespace

GadgetInstance build_gadget(const Graph& g, std::size_t k, GadgetVariant variant) {
    if (k < 1) throw InputError("gadget budget must be at least 1");
    const std::size_t n = g.order();
    const std::size_t length = variant == GadgetVariant::reinforced ? k + 1 : k;

    Builder b;
    for (Vertex v = 0; v < n; ++v) b.add(GadgetRole::original, static_cast<std::int32_t>(v));

    // Step 2: plain chains v1 = v, v2, ..., v_length.
    std::vector<std::vector<Vertex>> plain(n);
    for (Vertex v = 0; v < n; ++v) {
        plain[v].push_back(v);
        if (g.degree(v) < 2) continue;
        for (std::size_t i = 1; i < length; ++i)
            plain[v].push_back(b.add(GadgetRole::chain, static_cast<std::int32_t>(v)));
    }

    // Step 3: subdivide source edges (U), then chain edges.
    GadgetInstance gi;
    for (const Edge& e : g.edges()) {
        Vertex x = b.add(GadgetRole::u, -1);
        gi.u_of_edge.push_back(x);
        b.edge(e.u, x);
        b.edge(x, e.v);
    }
    std::vector<std::vector<Vertex>> links(n);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t i = 0; i + 1 < plain[v].size(); ++i) {
            Vertex x = b.add(GadgetRole::chain_link, static_cast<std::int32_t>(v));
            links[v].push_back(x);
            b.edge(plain[v][i], x);
            b.edge(x, plain[v][i + 1]);
        }
    }

    // U vertices incident to each source vertex, in edge order.
    std::vector<std::vector<Vertex>> incident_u(n);
    for (std::size_t i = 0; i < g.size(); ++i) {
        incident_u[g.edges()[i].u].push_back(gi.u_of_edge[i]);
        incident_u[g.edges()[i].v].push_back(gi.u_of_edge[i]);
    }

    // Step 4.
    if (variant == GadgetVariant::reinforced) {
        for (Vertex v = 0; v < n; ++v) {
            for (std::size_t i = 0; i < plain[v].size(); ++i)
                for (std::size_t j = 0; j < links[v].size(); ++j)
                    if (j != i && j + 1 != i) b.edge(plain[v][i], links[v][j]);
            for (Vertex x : incident_u[v])
                for (std::size_t i = 1; i < plain[v].size(); ++i) b.edge(x, plain[v][i]);
        }
    } else {
        const bool subdivide = variant == GadgetVariant::subdivided_aux;
        for (Vertex v = 0; v < n; ++v) {
            if (links[v].empty()) continue;
            const auto owner = static_cast<std::int32_t>(v);
            for (Vertex x : incident_u[v]) b.link(x, links[v][0], owner, subdivide);
            for (std::size_t i = 1; i < plain[v].size(); ++i) b.link(v, plain[v][i], owner, subdivide);
            // v_i x_{i+1}; x_i v_{i+1} is already a chain edge.
            for (std::size_t i = 0; i + 1 < links[v].size(); ++i)
                b.link(plain[v][i], links[v][i + 1], owner, subdivide);
        }
    }

    gi.origin = g;
    gi.budget = k;
    gi.variant = variant;
    gi.role = b.role_;
    gi.owner = b.owner_;
    gi.g_prime = Graph(b.role_.size(), std::move(b.edges_));
    gi.u_set = VertexSet(gi.u_of_edge);
    gi.chain_of.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t i = 0; i < plain[v].size(); ++i) {
            gi.chain_of[v].push_back(plain[v][i]);
            if (i < links[v].size()) gi.chain_of[v].push_back(links[v][i]);
        }
    }
    const Sizes size = expected_size(g, k, variant);
    gi.expected_vertices = size.vertices;
    gi.expected_edges = size.edges;

    const std::string where = " (" + std::string(to_string(variant)) + " gadget, k=" + std::to_string(k) + ")";
    if (gi.g_prime.order() != gi.expected_vertices || gi.g_prime.size() != gi.expected_edges)
        throw ConstructionError("size differs from closed form: " + std::to_string(gi.g_prime.order()) +
                                " vertices / " + std::to_string(gi.g_prime.size()) + " edges, expected " +
                                std::to_string(gi.expected_vertices) + " / " +
                                std::to_string(gi.expected_edges) + where);
    if (!is_bipartite(gi.g_prime)) throw ConstructionError("transformed graph is not bipartite" + where);
    if (gi.u_set.size() != g.size()) throw ConstructionError("U is not in bijection with the source edges" + where);
    for (std::size_t i = 0; i < g.size(); ++i) {
        const Edge& e = g.edges()[i];
        if (!gi.g_prime.has_edge(e.u, gi.u_of_edge[i]) || !gi.g_prime.has_edge(gi.u_of_edge[i], e.v))
            throw ConstructionError("U vertex " + std::to_string(gi.u_of_edge[i]) +
                                    " does not subdivide its source edge" + where);
    }
    if (components_after_vertex_deletion(gi.g_prime, {}).count != components_after_vertex_deletion(g, {}).count)
        throw ConstructionError("transformed graph changes the component count" + where);
    return gi;
}

std::optional<std::string> check_gadget(const GadgetInstance& gi) {
    GadgetInstance fresh;
    try {
        fresh = build_gadget(gi.origin, gi.budget, gi.variant);
    } catch (const Error& e) {
        return std::string(e.what());
    }
    if (!(fresh.g_prime == gi.g_prime)) return "transformed graph differs from a fresh build";
    if (fresh.u_of_edge != gi.u_of_edge) return "U table differs from a fresh build";
    if (!gi.chain_of.empty() && fresh.chain_of != gi.chain_of) return "chain table differs from a fresh build";
    if (!is_bipartite(gi.g_prime)) return "transformed graph is not bipartite";
    return std::nullopt;
}

VertexSet map_edge_cut_to_vertex_cut(const GadgetInstance& gi, const EdgeSet& a) {
    require_valid(gi.origin, a);
    std::vector<Vertex> out;
    for (const Edge& e : a) out.push_back(gi.u_of_edge[gi.origin.edge_index(e)]);
    return VertexSet(std::move(out));
}

EdgeSet map_vertex_cut_to_edge_cut(const GadgetInstance& gi, const VertexSet& s) {
    std::vector<Edge> out;
    for (Vertex x : s) {
        if (!gi.in_u(x))
            throw PreconditionError("vertex " + std::to_string(x) +
                                    " is outside U; normalize the cut with normalize_to_u first");
        out.push_back(gi.edge_of(x));
    }
    return EdgeSet(std::move(out));
}

VertexSet normalize_to_u(const GadgetInstance& gi, const VertexSet& s) {
    require_valid(gi.g_prime, s);
    detail::ScratchCounter counter(gi.g_prime);
    std::vector<Vertex> current(s.begin(), s.end());
    std::vector<char> chosen(gi.g_prime.order(), 0);
    for (Vertex v : s) chosen[v] = 1;

    std::vector<Vertex> candidates;
    for (Vertex v : s) {
        if (gi.in_u(v)) continue;
        current.erase(std::find(current.begin(), current.end(), v));
        chosen[v] = 0;

        candidates.clear();
        const std::int32_t owner = gi.owner[v];
        for (std::size_t i = 0; i < gi.origin.size(); ++i) {
            const Edge& e = gi.origin.edges()[i];
            const Vertex x = gi.u_of_edge[i];
            if (!chosen[x] && (static_cast<std::int32_t>(e.u) == owner || static_cast<std::int32_t>(e.v) == owner))
                candidates.push_back(x);
        }
        if (candidates.empty())
            for (Vertex x : gi.u_of_edge)
                if (!chosen[x]) candidates.push_back(x);
        if (candidates.empty()) continue;

        std::sort(candidates.begin(), candidates.end());
        std::optional<Vertex> pick;
        std::size_t pick_count = 0;
        for (Vertex x : candidates) {
            current.push_back(x);
            const std::size_t c = counter.count_without(current);
            current.pop_back();
            if (!pick || c > pick_count) {
                pick = x;
                pick_count = c;
            }
        }
        current.push_back(*pick);
        chosen[*pick] = 1;
    }
    return VertexSet(std::move(current));
}

RobustnessReport only_u_disconnects(const GadgetInstance& gi, std::size_t max_sets) {
    RobustnessReport report;
    const std::size_t base = components_after_vertex_deletion(gi.origin, {}).count;
    detail::ScratchCounter counter(gi.g_prime);
    std::vector<Vertex> deleted;

    auto probe = [&](const std::vector<Vertex>& pool, std::span<const unsigned> idx) {
        deleted.clear();
        for (unsigned i : idx) deleted.push_back(pool[i]);
        ++report.sets_checked;
        if (report.holds && counter.count_without(deleted) > base) {
            report.holds = false;
            report.witness = VertexSet(deleted);
        }
    };

    const auto n = static_cast<unsigned>(gi.origin.order());
    std::vector<Vertex> originals(n);
    for (Vertex v = 0; v < n; ++v) originals[v] = v;
    if (n > 20) throw CapacityError("robustness sweep over source subsets limited to 20 vertices");
    detail::for_each_subset(n, n, [&](std::span<const unsigned> idx) { probe(originals, idx); });

    std::vector<Vertex> pool;
    for (Vertex v = 0; v < gi.g_prime.order(); ++v)
        if (gi.role[v] == GadgetRole::original || gi.role[v] == GadgetRole::chain) pool.push_back(v);
    const auto p = static_cast<unsigned>(pool.size());
    report.exhaustive = detail::for_each_subset(p, static_cast<unsigned>(gi.budget),
                                                [&, left = max_sets](std::span<const unsigned> idx) mutable {
                                                    if (left == 0) return false;
                                                    --left;
                                                    probe(pool, idx);
                                                    return true;
                                                });
    return report;
}

Theorem1Report verify_theorem1(const Graph& g, std::size_t k, const Theorem1Limits& limits) {
    if (g.order() > limits.max_vertices || g.size() > limits.max_edges)
        throw CapacityError("gadget equality check limited to " + std::to_string(limits.max_vertices) + " vertices and " +
                            std::to_string(limits.max_edges) + " edges");
    const GadgetInstance gi = build_gadget(g, k, limits.variant);

    Theorem1Report report;
    report.k = k;
    report.gadget_vertices = gi.g_prime.order();
    report.gadget_edges = gi.g_prime.size();
    report.bipartite = is_bipartite(gi.g_prime).has_value();

    SolveConfig cfg = SolveConfig::with_budget(k);
    cfg.edge_limit = limits.max_edges;
    cfg.parallel = limits.parallel;
    const EdgeCutSolution edge_best = brute_force_kcut(g, cfg);
    report.best_edge = edge_best.component_count;
    report.edge_witness = edge_best.set;

    auto counting = [&gi](const std::vector<Vertex>& pool) {
        return [&gi, &pool] {
            return [counter = detail::ScratchCounter(gi.g_prime), &pool,
                    deleted = std::vector<Vertex>()](std::span<const unsigned> idx) mutable
                       -> std::optional<std::int64_t> {
                deleted.clear();
                for (unsigned i : idx) deleted.push_back(pool[i]);
                return static_cast<std::int64_t>(counter.count_without(deleted));
            };
        };
    };

    const std::vector<Vertex>& u_pool = gi.u_of_edge;
    auto vertex_best = detail::best_up_to(static_cast<unsigned>(u_pool.size()), static_cast<unsigned>(k),
                                          counting(u_pool), limits.parallel);
    report.best_vertex = static_cast<std::size_t>(vertex_best->score);
    std::vector<Vertex> witness;
    for (unsigned i : vertex_best->indices) witness.push_back(u_pool[i]);
    report.vertex_witness = VertexSet(std::move(witness));

    report.mapped_edge_witness_count =
        components_after_vertex_deletion(gi.g_prime, map_edge_cut_to_vertex_cut(gi, report.edge_witness)).count;
    report.mapped_vertex_witness_count =
        components_after_edge_deletion(g, map_vertex_cut_to_edge_cut(gi, report.vertex_witness)).count;

    if (limits.unrestricted_subsets > 0) {
        const auto n_prime = static_cast<unsigned>(gi.g_prime.order());
        std::uint64_t total = 0;
        for (unsigned r = 0; r <= k && r <= n_prime && total <= limits.unrestricted_subsets; ++r)
            total += std::min(detail::binomial(n_prime, r), limits.unrestricted_subsets + 1);
        if (total <= limits.unrestricted_subsets) {
            std::vector<Vertex> all(n_prime);
            for (Vertex v = 0; v < n_prime; ++v) all[v] = v;
            auto best = detail::best_up_to(n_prime, static_cast<unsigned>(k), counting(all), limits.parallel);
            report.unrestricted_best = static_cast<std::size_t>(best->score);
        }
    }
    return report;
}

}  // namespace kvcut
