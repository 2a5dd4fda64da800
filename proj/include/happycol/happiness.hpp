#pragma once

#include <cstdint>
#include <vector>

#include "happycol/colouring.hpp"
#include "happycol/fraction.hpp"
#include "happycol/graph.hpp"

namespace happycol {

struct HappinessReport {
    std::vector<bool> happy;  // per vertex
    std::int64_t count = 0;   // number of rho-happy vertices
    double ratio = 0.0;       // count / n (0 for the empty graph)
};

/// Number of v's neighbours sharing v's colour. v must be coloured.
std::int64_t same_colour_degree(const Graph& graph, const PartialColouring& colouring, Vertex v);

/// True iff v has at least ceil(rho * deg(v)) same-colour neighbours.
/// Uncoloured neighbours never count; v itself must be coloured.
bool is_rho_happy(const Graph& graph, const PartialColouring& colouring, Vertex v, const Fraction& rho);

/// Per-vertex happiness flags. Uncoloured vertices are reported unhappy.
HappinessReport happiness(const Graph& graph, const PartialColouring& colouring, const Fraction& rho);

/// Just the count, without materialising the flag vector.
std::int64_t happy_count(const Graph& graph, const PartialColouring& colouring, const Fraction& rho);

} // namespace happycol
