#ifndef CLIQUEROOTS_CLIQUES_HPP
#define CLIQUEROOTS_CLIQUES_HPP

#include <vector>

#include "cliqueroots/bigint.hpp"
#include "cliqueroots/graph.hpp"

namespace cliqueroots {

// (c_0, c_1, ..., c_omega): number of i-vertex complete subgraphs per size.
// c_0 = 1 by convention, c_1 = n, c_2 = m, and the last entry is nonzero
// except for the empty graph where the sequence is just (1).
class CliqueCounts {
public:
    explicit CliqueCounts(std::vector<BigInt> counts);

    int clique_number() const { return static_cast<int>(counts_.size()) - 1; }
    int size() const { return static_cast<int>(counts_.size()); }
    // c_i for any i >= 0; zero beyond omega.
    const BigInt& at(int i) const;
    const std::vector<BigInt>& values() const { return counts_; }

    bool operator==(const CliqueCounts& other) const = default;

private:
    std::vector<BigInt> counts_;
};

// Counts cliques of every size by ordered extension: a k-clique is grown only
// from its (k-1)-prefix in increasing vertex order, so each clique is visited
// exactly once.  Deliberately shares no code with enumerate_cliques, which is
// the exhaustive-subset oracle.
CliqueCounts count_cliques(const Graph& g);

// All k-subsets of vertices that induce complete subgraphs, in lexicographic
// order.  Exhaustive subset check; this is the oracle for count_cliques.
std::vector<VertexSet> enumerate_cliques(const Graph& g, int k);

// Largest k with c_k > 0; zero for the empty graph.
int clique_number(const Graph& g);

}  // namespace cliqueroots

#endif
