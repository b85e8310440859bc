#include "cliqueroots/cliques.hpp"

#include <bit>
#include <stdexcept>

namespace cliqueroots {

CliqueCounts::CliqueCounts(std::vector<BigInt> counts) : counts_(std::move(counts)) {
    if (counts_.empty() || counts_[0] != 1)
        throw std::invalid_argument("clique counts must start with c_0 = 1");
    for (const BigInt& c : counts_)
        if (c < 0) throw std::invalid_argument("clique counts must be non-negative");
    if (counts_.size() > 1 && counts_.back() == 0)
        throw std::invalid_argument("trailing clique count must be nonzero");
}

const BigInt& CliqueCounts::at(int i) const {
    static const BigInt zero = 0;
    if (i < 0) throw std::invalid_argument("clique size must be non-negative");
    if (i >= size()) return zero;
    return counts_[i];
}

namespace {

// Extends the clique whose common upper neighborhood is `candidates`; every
// vertex picked here is larger than all clique members, so each clique is
// generated from exactly one parent.
void extend_count(const Graph& g, std::uint64_t candidates, int size,
                  std::vector<BigInt>& counts) {
    std::uint64_t rest = candidates;
    while (rest) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        if (size + 1 >= static_cast<int>(counts.size())) counts.emplace_back(0);
        ++counts[size + 1];
        const std::uint64_t above_u = ~((std::uint64_t{2} << u) - 1);
        extend_count(g, candidates & g.neighbor_mask(u) & above_u, size + 1, counts);
    }
}

bool next_combination(VertexSet& pick, int n, int k) {
    for (int i = k - 1; i >= 0; --i) {
        if (pick[i] < n - (k - i)) {
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

CliqueCounts count_cliques(const Graph& g) {
    std::vector<BigInt> counts{1};
    const int n = g.vertex_count();
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    extend_count(g, all, 0, counts);
    return CliqueCounts(std::move(counts));
}

std::vector<VertexSet> enumerate_cliques(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("clique size must be non-negative");
    const int n = g.vertex_count();
    std::vector<VertexSet> result;
    if (k == 0) {
        result.push_back({});
        return result;
    }
    if (k > n) return result;
    VertexSet pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    do {
        bool complete = true;
        for (int i = 0; i < k && complete; ++i)
            for (int j = i + 1; j < k; ++j)
                if (!g.has_edge(pick[i], pick[j])) {
                    complete = false;
                    break;
                }
        if (complete) result.push_back(pick);
    } while (next_combination(pick, n, k));
    return result;
}

int clique_number(const Graph& g) { return count_cliques(g).clique_number(); }

}  // namespace cliqueroots
