#ifndef CLIQUEROOTS_GRAPH_HPP
#define CLIQUEROOTS_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace cliqueroots {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

// A graph together with the mapping from its (dense) vertex indices back to
// the vertex indices of the graph it was derived from.  old_label[i] is the
// original index of vertex i.
struct Subgraph;

// Immutable simple undirected graph on vertices 0..n-1.  Adjacency is kept
// both as sorted neighbor lists and as per-vertex bitmasks (n <= 64 covers
// everything this library handles; graph6 short form stops at 62).
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on self-loops or out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const VertexSet& neighbors(int v) const;
    std::uint64_t neighbor_mask(int v) const;

    // Edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    Subgraph induced_subgraph(const VertexSet& vertices) const;
    // G[N(v)], v itself excluded.  Throws std::invalid_argument on a bad vertex.
    Subgraph induced_neighborhood(int v) const;
    // G - v with dense re-indexing.
    Subgraph delete_vertex(int v) const;

    // Number of common neighbors of the endpoints of edge {u, v}; equals the
    // number of triangles the edge lies in.  Throws if {u, v} is not an edge.
    int edge_value(int u, int v) const;
    // Number of common neighbors of a triangle's three vertices.  Throws if
    // {u, v, w} does not induce a triangle.
    int triangle_value(int u, int v, int w) const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
    std::vector<std::uint64_t> mask_;
};

struct Subgraph {
    Graph graph;
    // old_label[new_index] = index in the parent graph.
    std::vector<int> old_label;
};

}  // namespace cliqueroots

#endif
