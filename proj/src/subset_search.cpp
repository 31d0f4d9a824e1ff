#include "subset_search.hpp"

#include <algorithm>
#include <cstdint>

namespace kvcut::detail {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::uint64_t binomial(unsigned n, unsigned r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    u128 acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > UINT64_MAX) return UINT64_MAX;
    }
    return static_cast<std::uint64_t>(acc);
}

void unrank_combination(unsigned n, unsigned r, std::uint64_t rank, std::span<unsigned> out) {
    unsigned c = 0;
    for (unsigned i = 0; i < r; ++i) {
        for (;;) {
            const std::uint64_t block = binomial(n - 1 - c, r - 1 - i);
            if (rank < block) break;
            rank -= block;
            ++c;
        }
        out[i] = c++;
    }
}

std::size_t ScratchCounter::count_without(std::span<const Vertex> deleted) {
    if (epoch_ >= 0xFFFFFFF0u) {
        std::fill(mark_.begin(), mark_.end(), 0);
        epoch_ = 0;
    }
    epoch_ += 2;
    const std::uint32_t gone = epoch_;
    const std::uint32_t seen = epoch_ + 1;
    for (Vertex v : deleted) mark_[v] = gone;

    std::size_t count = 0;
    for (Vertex root = 0; root < g_->order(); ++root) {
        if (mark_[root] == gone || mark_[root] == seen) continue;
        ++count;
        mark_[root] = seen;
        stack_.push_back(root);
        while (!stack_.empty()) {
            Vertex v = stack_.back();
            stack_.pop_back();
            for (Vertex w : g_->neighbors(v)) {
                if (mark_[w] == gone || mark_[w] == seen) continue;
                mark_[w] = seen;
                stack_.push_back(w);
            }
        }
    }
    return count;
}

}  // namespace kvcut::detail
