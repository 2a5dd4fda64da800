#include "happycol/graph.hpp"

#include <algorithm>
#include <string>

#include "happycol/errors.hpp"

namespace happycol {

Graph Graph::from_edges(std::int64_t n, const std::vector<Edge>& edges) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(edges.size());

    std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParameterError("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }

    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::int64_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.neighbours_.resize(static_cast<std::size_t>(2) * edges.size());

    std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        g.neighbours_[cursor[u]++] = v;
        g.neighbours_[cursor[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v) {
        auto begin = g.neighbours_.begin() + g.offsets_[v];
        auto end = g.neighbours_.begin() + g.offsets_[v + 1];
        std::sort(begin, end);
        if (std::adjacent_find(begin, end) != end)
            throw ParameterError("duplicate edge at vertex " + std::to_string(v));
    }
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : neighbours(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

} // namespace happycol
