#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kvcut/graph.hpp"

namespace kvcut {

/// How the auxiliary links around each chain are realized.
enum class GadgetVariant {
    /// Chain of k+1 plain vertices; every plain chain vertex is joined to every
    /// chain subdivision vertex, and every U vertex to every plain chain vertex
    /// of both endpoints. No deletion of at most k vertices splits a chain, so
    /// only U vertices disconnect.
    reinforced,
    /// Chain of k plain vertices plus the link edges x*x1, v*v_i, v_i*x_{i+1};
    /// links between same-class vertices get their own subdivision vertex.
    subdivided_aux,
    /// The link edges added as-is. Violates bipartiteness whenever a chain
    /// exists, so build_gadget rejects it.
    literal_aux,
};

std::string_view to_string(GadgetVariant v);
std::optional<GadgetVariant> parse_gadget_variant(std::string_view name);

/// What a vertex of the transformed graph stands for.
enum class GadgetRole : std::uint8_t {
    original,    // vertex of the source graph (chain head v1)
    chain,       // plain chain vertex v2..vL
    chain_link,  // subdivision vertex of a chain edge
    u,           // subdivision vertex of a source edge
    aux,         // subdivision vertex of an auxiliary link
};

struct GadgetInstance {
    Graph origin;
    Graph g_prime;
    std::size_t budget = 0;
    GadgetVariant variant = GadgetVariant::reinforced;

    VertexSet u_set;
    /// u_of_edge[i] is the U vertex of origin.edges()[i].
    std::vector<Vertex> u_of_edge;
    /// chain_of[v]: v followed by its chain in path order (v1, x1, v2, ...);
    /// just {v} for vertices of degree <= 1.
    std::vector<std::vector<Vertex>> chain_of;
    std::vector<GadgetRole> role;
    /// Source vertex whose chain a non-U vertex belongs to, or -1 for U.
    std::vector<std::int32_t> owner;

    /// Closed-form size of g_prime, checked against the built graph.
    std::size_t expected_vertices = 0;
    std::size_t expected_edges = 0;

    bool in_u(Vertex x) const { return x < role.size() && role[x] == GadgetRole::u; }
    /// Source edge subdivided by U vertex x. Throws PreconditionError otherwise.
    Edge edge_of(Vertex x) const;
};

/// Polynomial-size transformation of a k-cut instance into a vertex-cut
/// instance on a bipartite graph:
///   1. copy the source graph;
///   2. attach a chain of plain vertices to every vertex of degree >= 2;
///   3. subdivide every edge, source-edge subdivision vertices forming U;
///   4. add the variant's auxiliary links.
/// Throws InputError for k < 1 and ConstructionError (naming the violated
/// invariant) if the result is not bipartite, U is not in bijection with
/// the source edges, the size differs from the closed form, or the gadget
/// changes the component count of the source graph.
GadgetInstance build_gadget(const Graph& g, std::size_t k, GadgetVariant variant = GadgetVariant::reinforced);

/// Rebuilds the gadget from (origin, budget, variant) and compares it with gi.
/// Returns a description of the first mismatch, or nullopt.
std::optional<std::string> check_gadget(const GadgetInstance& gi);

VertexSet map_edge_cut_to_vertex_cut(const GadgetInstance& gi, const EdgeSet& a);
/// Throws PreconditionError when s is not inside u_set; call normalize_to_u first.
EdgeSet map_vertex_cut_to_edge_cut(const GadgetInstance& gi, const VertexSet& s);

/// Replaces the non-U members of s, in increasing id order, by U vertices.
/// Each replacement is the unused U vertex on an edge at the replaced
/// vertex's source vertex (falling back to any unused U vertex) that yields
/// the most components, ties by smallest id. With no unused U vertex left
/// the member is dropped. The result lies in u_set and has |s'| <= |s|.
VertexSet normalize_to_u(const GadgetInstance& gi, const VertexSet& s);

struct RobustnessReport {
    bool holds = true;
    /// False when max_sets stopped the bounded sweep early.
    bool exhaustive = true;
    std::size_t sets_checked = 0;
    std::optional<VertexSet> witness;
};

/// For every subset of source vertices, and every subset of at most
/// `budget` source-or-chain vertices (capped at max_sets), deleting it from
/// g_prime leaves no more components than the source graph has.
RobustnessReport only_u_disconnects(const GadgetInstance& gi, std::size_t max_sets = 200000);

struct Theorem1Limits {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 10;
    /// Bound on the number of subsets for the unrestricted search over all
    /// vertices of g_prime; 0 disables it.
    std::uint64_t unrestricted_subsets = 0;
    GadgetVariant variant = GadgetVariant::reinforced;
    bool parallel = true;
};

struct Theorem1Report {
    std::size_t k = 0;
    std::size_t best_edge = 0;
    std::size_t best_vertex = 0;
    EdgeSet edge_witness;
    VertexSet vertex_witness;
    /// Components of g_prime after deleting the image of edge_witness, and of
    /// origin after deleting the preimage of vertex_witness.
    std::size_t mapped_edge_witness_count = 0;
    std::size_t mapped_vertex_witness_count = 0;
    bool bipartite = false;
    std::optional<std::size_t> unrestricted_best;
    std::size_t gadget_vertices = 0;
    std::size_t gadget_edges = 0;

    bool equal() const {
        return best_edge == best_vertex && mapped_edge_witness_count == best_edge &&
               mapped_vertex_witness_count == best_vertex &&
               (!unrestricted_best || *unrestricted_best == best_vertex);
    }
};

/// Compares max_{|A|<=k} c(G, A) with max over S ⊆ U, |S| <= k, of c(G', S).
/// Throws CapacityError beyond the limits.
Theorem1Report verify_theorem1(const Graph& g, std::size_t k, const Theorem1Limits& limits = {});

}  // namespace kvcut
