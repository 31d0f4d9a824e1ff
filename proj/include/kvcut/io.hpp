#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kvcut/graph.hpp"
#include "kvcut/reductions.hpp"
#include "kvcut/solvers.hpp"

namespace kvcut {

/// Instance text format:
///
///     # comment
///     n m
///     u v            (m edge lines)
///     w u value      (optional; value is "3", "3/4" or "0.75")
///
/// Blank lines and lines starting with '#' are ignored. Malformed lines
/// raise ParseError with the 1-based line number; self-loops, duplicates,
/// out-of-range endpoints and a body that disagrees with the declared m are
/// reported the same way.
Graph parse_instance(std::string_view text);

/// Canonical text: header, edges ascending, then weight lines for weights
/// other than 1 in vertex order. parse_instance(emit_instance(g)) == g.
std::string emit_instance(const Graph& g);

/// "x" for integers, "a/b" otherwise.
std::string format_weight(const Weight& w);
/// Accepts "3", "-3", "3/4", "0.75". Throws InputError when malformed.
Weight parse_weight(std::string_view text);

/// Graphviz text with nodes and edges in id order; highlighted vertices get
/// style=filled and a fill color.
std::string emit_dot(const Graph& g, const std::optional<VertexSet>& highlight = std::nullopt,
                     std::string_view name = "G");

/// Side table of a gadget written next to the instance file of g_prime.
struct GadgetMapping {
    std::size_t budget = 0;
    GadgetVariant variant = GadgetVariant::reinforced;
    Graph origin;
    /// (U vertex of g_prime, source edge) in source-edge order.
    std::vector<std::pair<Vertex, Edge>> u_table;
};

std::string emit_gadget_mapping(const GadgetInstance& gi);
GadgetMapping parse_gadget_mapping(std::string_view text);

/// Rebuilds the gadget recorded in `mapping` and checks that g_prime and the
/// U table match it. Throws ConstructionError on any mismatch.
GadgetInstance load_gadget(const Graph& g_prime, const GadgetMapping& mapping);

/// FNV-1a 64 hash of the canonical instance text, as 16 hex digits.
std::string instance_hash(const Graph& g);

struct SolutionRecord {
    std::string instance_hash;
    std::string objective;
    std::string solver;
    Weight budget = 0;
    std::size_t threshold = 0;
    VertexSet set;
    /// Objective value: component count, pairwise connectivity, or the
    /// number of small components.
    std::int64_t value = 0;
    std::size_t component_count = 0;
    std::uint64_t pairwise = 0;
    bool optimal = false;
    double wall_time_ms = 0.0;
};

SolutionRecord make_solution_record(const Graph& g, const SolveConfig& cfg, const VertexCutSolution& sol,
                                    std::string solver, double wall_time_ms);

/// One JSON object on a single line (no trailing newline).
std::string to_json_line(const SolutionRecord& rec);
SolutionRecord parse_solution_record(std::string_view json_line);

/// Re-evaluates rec.set on g and compares value, component count and
/// pairwise connectivity.
bool validates(const Graph& g, const SolutionRecord& rec);

}  // namespace kvcut
