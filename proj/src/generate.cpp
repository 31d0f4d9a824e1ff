#include "kvcut/generate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "kvcut/error.hpp"

namespace kvcut {

bool Rng::bernoulli(double p) {
    if (!(p > 0.0)) return false;
    if (p >= 1.0) return true;
    // p * 2^64 < 2^64 because p < 1.
    const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
    return next() < threshold;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below: bound must be positive");
    // Rejection keeps the draw unbiased: accept only below the largest
    // multiple of bound.
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        const std::uint64_t x = next();
        if (x < limit) return x % bound;
    }
}

std::vector<Vertex> Rng::permutation(std::size_t n) {
    std::vector<Vertex> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
    return perm;
}

std::string_view to_string(GraphKind k) {
    switch (k) {
        case GraphKind::gnp: return "gnp";
        case GraphKind::bipartite: return "bipartite";
        case GraphKind::split: return "split";
        case GraphKind::complete_bipartite: return "complete-bipartite";
        case GraphKind::path: return "path";
        case GraphKind::star: return "star";
        case GraphKind::cycle: return "cycle";
    }
    return "?";
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
    for (GraphKind k : {GraphKind::gnp, GraphKind::bipartite, GraphKind::split, GraphKind::complete_bipartite,
                        GraphKind::path, GraphKind::star, GraphKind::cycle}) {
        if (to_string(k) == name) return k;
    }
    return std::nullopt;
}

Graph generate(GraphKind kind, const GenParams& params, std::uint64_t seed) {
    if (!(params.p >= 0.0 && params.p <= 1.0))
        throw InputError("generate: probability must lie in [0, 1], got " + std::to_string(params.p));
    Rng rng(seed);
    std::vector<Edge> edges;
    std::size_t n = 0;

    switch (kind) {
        case GraphKind::gnp:
            n = params.n;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v)
                    if (rng.bernoulli(params.p)) edges.emplace_back(u, v);
            break;
        case GraphKind::bipartite:
        case GraphKind::complete_bipartite:
            n = params.n1 + params.n2;
            for (std::size_t u = 0; u < params.n1; ++u)
                for (std::size_t v = params.n1; v < n; ++v)
                    if (kind == GraphKind::complete_bipartite || rng.bernoulli(params.p)) edges.emplace_back(u, v);
            break;
        case GraphKind::split:
            // Clique on 0..n2-1, independent vertices n2..n2+n1-1.
            n = params.n1 + params.n2;
            for (std::size_t u = 0; u < params.n2; ++u)
                for (std::size_t v = u + 1; v < params.n2; ++v) edges.emplace_back(u, v);
            for (std::size_t v = params.n2; v < n; ++v)
                for (std::size_t u = 0; u < params.n2; ++u)
                    if (rng.bernoulli(params.p)) edges.emplace_back(u, v);
            break;
        case GraphKind::path:
            n = params.n;
            for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
            break;
        case GraphKind::star:
            n = params.n;
            for (std::size_t v = 1; v < n; ++v) edges.emplace_back(0, v);
            break;
        case GraphKind::cycle:
            n = params.n;
            if (n < 3) throw InputError("generate: a cycle needs at least 3 vertices");
            for (std::size_t v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
            edges.emplace_back(0, n - 1);
            break;
    }
    if (n > UINT32_MAX) throw InputError("generate: too many vertices");

    if (params.relabel) {
        const auto perm = rng.permutation(n);
        for (Edge& e : edges) e = Edge(perm[e.u], perm[e.v]);
    }
    return Graph(n, std::move(edges));
}

Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);

    std::vector<Edge> missing;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (std::find(edges.begin(), edges.end(), Edge(u, v)) == edges.end()) missing.emplace_back(u, v);
    // Partial Fisher-Yates: the first `take` entries form a uniform sample.
    const std::size_t take = std::min(extra, missing.size());
    for (std::size_t i = 0; i < take; ++i) {
        std::swap(missing[i], missing[i + rng.below(missing.size() - i)]);
        edges.push_back(missing[i]);
    }

    const auto perm = rng.permutation(n);
    for (Edge& e : edges) e = Edge(perm[e.u], perm[e.v]);
    return Graph(n, std::move(edges));
}

}  // namespace kvcut
