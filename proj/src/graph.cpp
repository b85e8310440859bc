#include "cliqueroots/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace cliqueroots {

namespace {

std::string pair_text(int u, int v) {
    return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (n > 64) throw std::invalid_argument("graphs larger than 64 vertices are not supported");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    g.mask_.assign(n, 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + pair_text(u, v));
        if (u == v) throw std::invalid_argument("self-loop rejected: " + pair_text(u, v));
        if (g.mask_[u] >> v & 1) continue;
        g.mask_[u] |= std::uint64_t{1} << v;
        g.mask_[v] |= std::uint64_t{1} << u;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.m_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && (mask_[u] >> v & 1);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const VertexSet& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::uint64_t Graph::neighbor_mask(int v) const {
    check_vertex(v);
    return mask_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Subgraph Graph::induced_subgraph(const VertexSet& vertices) const {
    std::vector<int> new_index(n_, -1);
    Subgraph sub;
    sub.old_label.reserve(vertices.size());
    for (int v : vertices) {
        check_vertex(v);
        if (new_index[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        new_index[v] = static_cast<int>(sub.old_label.size());
        sub.old_label.push_back(v);
    }
    std::vector<std::pair<int, int>> sub_edges;
    for (int v : vertices)
        for (int w : adj_[v])
            if (v < w && new_index[w] != -1) sub_edges.emplace_back(new_index[v], new_index[w]);
    sub.graph = Graph::from_edges(static_cast<int>(vertices.size()), sub_edges);
    return sub;
}

Subgraph Graph::induced_neighborhood(int v) const {
    check_vertex(v);
    return induced_subgraph(adj_[v]);
}

Subgraph Graph::delete_vertex(int v) const {
    check_vertex(v);
    VertexSet keep;
    keep.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(keep);
}

int Graph::edge_value(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("not an edge: " + pair_text(u, v));
    return static_cast<int>(std::popcount(mask_[u] & mask_[v]));
}

int Graph::triangle_value(int u, int v, int w) const {
    if (!has_edge(u, v) || !has_edge(u, w) || !has_edge(v, w))
        throw std::invalid_argument("vertices do not induce a triangle");
    return static_cast<int>(std::popcount(mask_[u] & mask_[v] & mask_[w]));
}

}  // namespace cliqueroots
