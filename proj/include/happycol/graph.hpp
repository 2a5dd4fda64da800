#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace happycol {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph in compressed adjacency form.
///
/// Immutable once built: neighbour lists are sorted ascending, symmetric,
/// and free of self-loops and duplicates, so the structure is safe to share
/// across threads.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list given in either endpoint order.
    /// Rejects self-loops, duplicate edges and out-of-range endpoints.
    static Graph from_edges(std::int64_t n, const std::vector<Edge>& edges);

    std::int64_t vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbours(Vertex v) const {
        check_vertex(v);
        return {neighbours_.data() + offsets_[v], neighbours_.data() + offsets_[v + 1]};
    }

    std::int64_t degree(Vertex v) const {
        check_vertex(v);
        return offsets_[v + 1] - offsets_[v];
    }

    bool adjacent(Vertex u, Vertex v) const;

    /// Edge list with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

private:
    void check_vertex(Vertex v) const;

    std::int64_t n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::int64_t> offsets_{0};
    std::vector<Vertex> neighbours_;
};

} // namespace happycol
