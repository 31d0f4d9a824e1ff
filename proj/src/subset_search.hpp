#pragma once

// Exhaustive subset search shared by the exact solvers and verifiers.
//
// Subsets are visited by cardinality, then in lexicographic order of their
// sorted index tuples. Within one cardinality the winner is the highest score
// with the smallest lexicographic rank, so the serial loop and the OpenMP
// chunked loop reduce to the same answer regardless of scheduling.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kvcut/bitgraph.hpp"
#include "kvcut/graph.hpp"

namespace kvcut::detail {

std::uint64_t binomial(unsigned n, unsigned r);

/// Writes the combination of lexicographic rank `rank` among r-subsets of n.
void unrank_combination(unsigned n, unsigned r, std::uint64_t rank, std::span<unsigned> out);

/// Advances to the next r-subset in lexicographic order; false at the end.
inline bool next_combination(unsigned n, std::span<unsigned> idx) {
    const auto r = static_cast<unsigned>(idx.size());
    for (unsigned i = r; i-- > 0;) {
        if (idx[i] < n - r + i) {
            ++idx[i];
            for (unsigned j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct SubsetWinner {
    std::int64_t score = 0;
    std::vector<unsigned> indices;
};

namespace impl {

struct Local {
    bool found = false;
    std::int64_t score = 0;
    std::uint64_t rank = 0;
    std::vector<unsigned> indices;

    void offer(std::int64_t s, std::uint64_t rk, std::span<const unsigned> idx) {
        if (!found || s > score || (s == score && rk < rank)) {
            found = true;
            score = s;
            rank = rk;
            indices.assign(idx.begin(), idx.end());
        }
    }

    void merge(const Local& other) {
        if (other.found) offer(other.score, other.rank, other.indices);
    }
};

inline constexpr std::uint64_t kChunk = 1u << 12;

}  // namespace impl

/// Best r-subset of {0..n-1}. `make_eval()` returns a per-thread callable
/// mapping an index tuple to std::optional<int64_t> (nullopt = infeasible).
template <class MakeEval>
std::optional<SubsetWinner> best_of_size(unsigned n, unsigned r, MakeEval&& make_eval, bool parallel) {
    if (r > n) return std::nullopt;
    const std::uint64_t total = binomial(n, r);
    impl::Local best;

    if (!parallel || total <= impl::kChunk) {
        auto eval = make_eval();
        std::vector<unsigned> idx(r);
        for (unsigned i = 0; i < r; ++i) idx[i] = i;
        std::uint64_t rank = 0;
        do {
            if (auto s = eval(std::span<const unsigned>(idx))) best.offer(*s, rank, idx);
            ++rank;
        } while (next_combination(n, idx));
    } else {
        const std::uint64_t chunks = (total + impl::kChunk - 1) / impl::kChunk;
#pragma omp parallel
        {
            auto eval = make_eval();
            impl::Local local;
            std::vector<unsigned> idx(r);
#pragma omp for schedule(dynamic)
            for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
                std::uint64_t rank = static_cast<std::uint64_t>(c) * impl::kChunk;
                const std::uint64_t stop = std::min(total, rank + impl::kChunk);
                unrank_combination(n, r, rank, idx);
                for (;;) {
                    if (auto s = eval(std::span<const unsigned>(idx))) local.offer(*s, rank, idx);
                    if (++rank == stop) break;
                    next_combination(n, idx);
                }
            }
#pragma omp critical(kvcut_subset_reduce)
            best.merge(local);
        }
    }
    if (!best.found) return std::nullopt;
    return SubsetWinner{best.score, std::move(best.indices)};
}

/// Best subset of size at most max_card: highest score, then smaller size,
/// then lexicographically smallest.
template <class MakeEval>
std::optional<SubsetWinner> best_up_to(unsigned n, unsigned max_card, MakeEval&& make_eval, bool parallel) {
    std::optional<SubsetWinner> best;
    for (unsigned r = 0; r <= std::min(n, max_card); ++r) {
        auto w = best_of_size(n, r, make_eval, parallel);
        if (w && (!best || w->score > best->score)) best = std::move(w);
    }
    return best;
}

/// Serial visit of every subset of size <= max_card in search order. When f
/// returns bool, false stops the walk; the result tells whether it finished.
template <class F>
bool for_each_subset(unsigned n, unsigned max_card, F&& f) {
    std::vector<unsigned> idx;
    for (unsigned r = 0; r <= std::min(n, max_card); ++r) {
        idx.resize(r);
        for (unsigned i = 0; i < r; ++i) idx[i] = i;
        do {
            if constexpr (std::is_same_v<decltype(f(std::span<const unsigned>(idx))), bool>) {
                if (!f(std::span<const unsigned>(idx))) return false;
            } else {
                f(std::span<const unsigned>(idx));
            }
        } while (next_combination(n, idx));
    }
    return true;
}

inline Mask to_mask(std::span<const unsigned> idx) {
    Mask m = 0;
    for (unsigned i : idx) m |= bit(i);
    return m;
}

inline VertexSet to_vertex_set(std::span<const unsigned> idx) {
    return VertexSet(std::vector<Vertex>(idx.begin(), idx.end()));
}

inline VertexSet to_vertex_set(Mask m) {
    std::vector<Vertex> out;
    for (; m != 0; m &= m - 1) out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return VertexSet(std::move(out));
}

/// Component counting on an arbitrary-size graph with reusable buffers.
class ScratchCounter {
public:
    explicit ScratchCounter(const Graph& g) : g_(&g), mark_(g.order(), 0), stack_() {}

    /// Components of g minus `deleted`.
    std::size_t count_without(std::span<const Vertex> deleted);

private:
    const Graph* g_;
    std::vector<std::uint32_t> mark_;
    std::vector<Vertex> stack_;
    std::uint32_t epoch_ = 0;
};

}  // namespace kvcut::detail
