#include "kvcut/solvers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "kvcut/bitgraph.hpp"
#include "kvcut/components.hpp"
#include "kvcut/error.hpp"
#include "subset_search.hpp"

namespace kvcut {

std::string_view to_string(Objective o) {
    switch (o) {
        case Objective::max_components: return "components";
        case Objective::min_pairwise: return "pairwise";
        case Objective::max_small_components: return "small-components";
    }
    return "unknown";
}

std::size_t SolveConfig::cardinality() const {
    if (budget < Weight(0)) throw InputError("budget must be non-negative");
    return static_cast<std::size_t>(budget.numerator() / budget.denominator());
}

namespace {

void require_exhaustive(const Graph& g, const SolveConfig& cfg) {
    const std::size_t limit = std::min(cfg.exhaustive_limit, kMaskKernelLimit);
    if (g.order() > limit)
        throw CapacityError("exhaustive search limited to " + std::to_string(limit) +
                            " vertices, graph has " + std::to_string(g.order()));
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw InputError("weights too large to scale exactly");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw InputError("weights too large to scale exactly");
    return out;
}

// Weights and budget brought to a common denominator.
struct ScaledWeights {
    std::vector<std::int64_t> weight;
    std::int64_t budget = 0;
};

ScaledWeights scale_weights(const Graph& g, const Weight& budget) {
    std::int64_t denom = budget.denominator();
    for (Vertex v = 0; v < g.order(); ++v) {
        const std::int64_t d = g.weight(v).denominator();
        denom = checked_mul(denom / std::gcd(denom, d), d);
    }
    ScaledWeights out;
    out.budget = checked_mul(budget.numerator(), denom / budget.denominator());
    // Any subset sum then fits as well.
    std::int64_t total = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const Weight w = g.weight(v);
        out.weight.push_back(checked_mul(w.numerator(), denom / w.denominator()));
        total = checked_add(total, out.weight.back());
    }
    (void)total;
    return out;
}

std::function<std::int64_t(Mask)> make_scorer(const BitGraph& bg, const SolveConfig& cfg) {
    const Mask all = bg.all();
    switch (cfg.objective) {
        case Objective::max_components:
            return [&bg, all](Mask del) { return static_cast<std::int64_t>(bg.count_components(all & ~del)); };
        case Objective::min_pairwise:
            return [&bg, all](Mask del) { return -static_cast<std::int64_t>(bg.pairwise(all & ~del)); };
        case Objective::max_small_components: {
            const std::size_t c = cfg.threshold;
            return [&bg, all, c](Mask del) {
                return static_cast<std::int64_t>(bg.count_small(all & ~del, c));
            };
        }
    }
    throw InputError("unknown objective");
}

}  // namespace

VertexCutSolution evaluate_vertex_cut(const Graph& g, const VertexSet& s, bool weighted,
                                      std::size_t threshold) {
    const ComponentReport report = components_after_vertex_deletion(g, s);
    VertexCutSolution sol;
    sol.set = s;
    sol.component_count = report.count;
    sol.pairwise = pairwise_connectivity(report);
    sol.small_components = count_small_components(report, threshold);
    sol.budget_used = weighted ? g.total_weight(s) : Weight(static_cast<std::int64_t>(s.size()));
    return sol;
}

bool is_consistent(const Graph& g, const SolveConfig& cfg, const VertexCutSolution& sol) {
    for (Vertex v : sol.set)
        if (!g.has_vertex(v)) return false;
    const VertexCutSolution re = evaluate_vertex_cut(g, sol.set, cfg.weighted, cfg.threshold);
    const bool within = cfg.weighted ? re.budget_used <= cfg.budget : sol.set.size() <= cfg.cardinality();
    return within && re.component_count == sol.component_count && re.pairwise == sol.pairwise &&
           re.small_components == sol.small_components && re.budget_used == sol.budget_used;
}

bool is_consistent(const Graph& g, std::size_t k, const EdgeCutSolution& sol) {
    for (const Edge& e : sol.set)
        if (!g.has_edge(e.u, e.v)) return false;
    return sol.set.size() <= k && components_after_edge_deletion(g, sol.set).count == sol.component_count;
}

VertexCutSolution brute_force_vertex_cut(const Graph& g, const SolveConfig& cfg) {
    require_exhaustive(g, cfg);
    const BitGraph bg(g);
    const auto n = static_cast<unsigned>(g.order());
    const auto score = make_scorer(bg, cfg);

    std::optional<detail::SubsetWinner> best;
    if (!cfg.weighted) {
        const auto k = static_cast<unsigned>(std::min<std::size_t>(cfg.cardinality(), n));
        best = detail::best_up_to(
            n, k, [&] { return [&](std::span<const unsigned> idx) -> std::optional<std::int64_t> {
                return score(detail::to_mask(idx));
            }; },
            cfg.parallel);
    } else {
        if (cfg.budget < Weight(0)) throw InputError("budget must be non-negative");
        const ScaledWeights sw = scale_weights(g, cfg.budget);
        std::vector<std::int64_t> sorted = sw.weight;
        std::sort(sorted.begin(), sorted.end());
        unsigned max_card = 0;
        for (std::int64_t acc = 0; max_card < n && (acc += sorted[max_card]) <= sw.budget;) ++max_card;
        best = detail::best_up_to(
            n, max_card, [&] { return [&](std::span<const unsigned> idx) -> std::optional<std::int64_t> {
                std::int64_t w = 0;
                for (unsigned i : idx) w += sw.weight[i];
                if (w > sw.budget) return std::nullopt;
                return score(detail::to_mask(idx));
            }; },
            cfg.parallel);
    }
    // The empty set is always feasible, so a winner exists.
    VertexCutSolution sol =
        evaluate_vertex_cut(g, detail::to_vertex_set(best->indices), cfg.weighted, cfg.threshold);
    sol.optimal = true;
    return sol;
}

VertexCutSolution brute_force_kvcp(const Graph& g, const SolveConfig& cfg) {
    SolveConfig c = cfg;
    c.objective = Objective::max_components;
    c.weighted = false;
    return brute_force_vertex_cut(g, c);
}

VertexCutSolution brute_force_kvcp_weighted(const Graph& g, const SolveConfig& cfg) {
    SolveConfig c = cfg;
    c.objective = Objective::max_components;
    c.weighted = true;
    return brute_force_vertex_cut(g, c);
}

VertexCutSolution brute_force_cnp(const Graph& g, const SolveConfig& cfg) {
    SolveConfig c = cfg;
    c.objective = Objective::min_pairwise;
    return brute_force_vertex_cut(g, c);
}

EdgeCutSolution brute_force_kcut(const Graph& g, const SolveConfig& cfg) {
    const std::size_t m = g.size();
    if (m > std::min(cfg.edge_limit, kMaskKernelLimit))
        throw CapacityError("exhaustive edge search limited to " + std::to_string(cfg.edge_limit) +
                            " edges, graph has " + std::to_string(m));
    const auto k = static_cast<unsigned>(std::min(cfg.cardinality(), m));
    const auto& edges = g.edges();
    const std::size_t n = g.order();

    auto make_eval = [&] {
        return [&, parent = std::vector<Vertex>(n)](std::span<const unsigned> idx) mutable
                   -> std::optional<std::int64_t> {
            std::iota(parent.begin(), parent.end(), Vertex{0});
            auto find = [&parent](Vertex x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            std::size_t count = n;
            std::size_t skip = 0;
            for (std::size_t e = 0; e < edges.size(); ++e) {
                if (skip < idx.size() && idx[skip] == e) {
                    ++skip;
                    continue;
                }
                Vertex a = find(edges[e].u);
                Vertex b = find(edges[e].v);
                if (a != b) {
                    parent[a] = b;
                    --count;
                }
            }
            return static_cast<std::int64_t>(count);
        };
    };
    auto best = detail::best_up_to(static_cast<unsigned>(m), k, make_eval, cfg.parallel);

    EdgeCutSolution sol;
    std::vector<Edge> chosen;
    for (unsigned i : best->indices) chosen.push_back(edges[i]);
    sol.set = EdgeSet(std::move(chosen));
    sol.component_count = static_cast<std::size_t>(best->score);
    return sol;
}

namespace {

class BranchAndBound {
public:
    BranchAndBound(const BitGraph& g, std::size_t k, std::optional<std::chrono::milliseconds> limit)
        : g_(g), k_(k), order_(g.order()) {
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(), [&g](Vertex a, Vertex b) {
            return g.degree_in(a, g.all()) > g.degree_in(b, g.all());
        });
        cap_ = independence_number(g, g.all());
        if (limit) deadline_ = std::chrono::steady_clock::now() + *limit;
    }

    void seed(Mask set, std::size_t count) {
        best_set_ = set;
        best_count_ = count;
    }

    void run() { dfs(0, 0, 0, g_.count_components(g_.all())); }

    Mask best_set() const { return best_set_; }
    std::size_t best_count() const { return best_count_; }
    bool complete() const { return !timed_out_; }

private:
    void dfs(std::size_t pos, Mask deleted, std::size_t used, std::size_t current) {
        if (timed_out_ || best_count_ >= cap_) return;
        if (deadline_ && (++nodes_ & 0x3FF) == 0 && std::chrono::steady_clock::now() > *deadline_) {
            timed_out_ = true;
            return;
        }
        if (current > best_count_) {
            best_count_ = current;
            best_set_ = deleted;
        }
        if (used == k_ || pos == order_.size()) return;

        const Mask alive = g_.all() & ~deleted;
        gains_.clear();
        for (std::size_t i = pos; i < order_.size(); ++i) {
            const std::size_t d = g_.degree_in(order_[i], alive);
            if (d >= 2) gains_.push_back(d - 1);
        }
        const std::size_t r = std::min(k_ - used, gains_.size());
        std::partial_sort(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(r), gains_.end(),
                          std::greater<>());
        const std::size_t local =
            current + std::accumulate(gains_.begin(), gains_.begin() + static_cast<std::ptrdiff_t>(r),
                                      std::size_t{0});
        if (std::min(local, cap_) <= best_count_) return;

        const Vertex v = order_[pos];
        // Deleting a vertex of degree <= 1 never raises the count.
        if (g_.degree_in(v, alive) >= 2) {
            const Mask next = deleted | bit(v);
            dfs(pos + 1, next, used + 1, g_.count_components(g_.all() & ~next));
        }
        dfs(pos + 1, deleted, used, current);
    }

    const BitGraph& g_;
    std::size_t k_;
    std::vector<Vertex> order_;
    std::vector<std::size_t> gains_;
    std::size_t cap_ = 0;
    Mask best_set_ = 0;
    std::size_t best_count_ = 0;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

}  // namespace

VertexCutSolution branch_and_bound_kvcp(const Graph& g, const SolveConfig& cfg) {
    const BitGraph bg(g);
    const std::size_t k = std::min(cfg.cardinality(), g.order());
    BranchAndBound search(bg, k, cfg.time_limit);

    SolveConfig greedy_cfg = cfg;
    greedy_cfg.time_limit.reset();
    const VertexCutSolution start = greedy_kvcp(g, greedy_cfg);
    Mask start_mask = 0;
    for (Vertex v : start.set) start_mask |= bit(v);
    search.seed(start_mask, start.component_count);
    search.run();

    VertexCutSolution sol = evaluate_vertex_cut(g, detail::to_vertex_set(search.best_set()));
    sol.optimal = search.complete();
    return sol;
}

VertexCutSolution greedy_kvcp(const Graph& g, const SolveConfig& cfg) {
    const std::size_t k = std::min(cfg.cardinality(), g.order());
    detail::ScratchCounter counter(g);
    std::vector<Vertex> deleted;
    std::vector<char> gone(g.order(), 0);
    std::size_t current = counter.count_without(deleted);

    std::size_t best_count = current;
    std::size_t best_prefix = 0;
    while (deleted.size() < k) {
        std::optional<Vertex> pick;
        std::size_t pick_count = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            if (gone[v]) continue;
            deleted.push_back(v);
            const std::size_t c = counter.count_without(deleted);
            deleted.pop_back();
            if (!pick || c > pick_count) {
                pick = v;
                pick_count = c;
            }
        }
        if (!pick || pick_count < current) break;
        deleted.push_back(*pick);
        gone[*pick] = 1;
        current = pick_count;
        if (current > best_count) {
            best_count = current;
            best_prefix = deleted.size();
        }
    }
    deleted.resize(best_prefix);
    VertexCutSolution sol = evaluate_vertex_cut(g, VertexSet(std::move(deleted)));
    sol.optimal = false;
    return sol;
}

}  // namespace kvcut
