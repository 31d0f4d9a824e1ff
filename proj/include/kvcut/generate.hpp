#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "kvcut/graph.hpp"

namespace kvcut {

/// Deterministic randomness from one 64-bit seed. Only the raw output of
/// std::mt19937_64 is used (fully specified by the standard), so streams are
/// identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// True with probability p (p <= 0 never, p >= 1 always).
    bool bernoulli(double p);
    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    /// Uniformly random permutation of 0..n-1 (Fisher-Yates).
    std::vector<Vertex> permutation(std::size_t n);

private:
    std::mt19937_64 engine_;
};

enum class GraphKind { gnp, bipartite, split, complete_bipartite, path, star, cycle };

std::string_view to_string(GraphKind k);
std::optional<GraphKind> parse_graph_kind(std::string_view name);

struct GenParams {
    /// Vertex count for gnp, path, star (hub + n-1 leaves) and cycle.
    std::size_t n = 0;
    /// Side sizes for bipartite and complete-bipartite; for split, n1 is the
    /// independent side and n2 the clique.
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    /// Edge probability: every pair for gnp, cross pairs for bipartite and
    /// split.
    double p = 0.5;
    /// Apply a random relabelling after construction.
    bool relabel = false;
};

/// Builds a graph of the given kind. The same (kind, params, seed) always
/// gives the same graph. Throws InputError for p outside [0, 1] or a cycle
/// with fewer than 3 vertices.
Graph generate(GraphKind kind, const GenParams& params, std::uint64_t seed);

/// Connected graph on n vertices: a random recursive tree plus `extra`
/// further edges chosen uniformly among the missing pairs (capped at the
/// number of missing pairs), then randomly relabelled.
Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed);

}  // namespace kvcut
