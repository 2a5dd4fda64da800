#include "happycol/happiness.hpp"

#include <string>

namespace happycol {

namespace {

void check_sizes(const Graph& graph, const PartialColouring& colouring) {
    if (graph.vertex_count() != colouring.size())
        throw ContractViolation("colouring length does not match graph");
}

void check_rho(const Fraction& rho) {
    if (Fraction::of(1, 1) < rho) throw ParameterError("rho must lie in [0, 1]");
}

std::int64_t same_colour_count(const Graph& graph, const std::vector<Colour>& colours, Vertex v) {
    const Colour c = colours[static_cast<std::size_t>(v)];
    std::int64_t same = 0;
    for (Vertex u : graph.neighbours(v)) same += colours[static_cast<std::size_t>(u)] == c;
    return same;
}

} // namespace

std::int64_t same_colour_degree(const Graph& graph, const PartialColouring& colouring, Vertex v) {
    check_sizes(graph, colouring);
    if (!colouring.is_coloured(v))
        throw ContractViolation("same_colour_degree of uncoloured vertex " + std::to_string(v));
    return same_colour_count(graph, colouring.labels(), v);
}

bool is_rho_happy(const Graph& graph, const PartialColouring& colouring, Vertex v, const Fraction& rho) {
    check_rho(rho);
    return same_colour_degree(graph, colouring, v) >= rho.ceil_mul(graph.degree(v));
}

HappinessReport happiness(const Graph& graph, const PartialColouring& colouring, const Fraction& rho) {
    check_sizes(graph, colouring);
    check_rho(rho);
    const auto n = graph.vertex_count();
    const auto& colours = colouring.labels();
    HappinessReport report;
    report.happy.assign(static_cast<std::size_t>(n), false);
    for (Vertex v = 0; v < n; ++v) {
        if (colours[static_cast<std::size_t>(v)] == 0) continue;
        if (same_colour_count(graph, colours, v) >= rho.ceil_mul(graph.degree(v))) {
            report.happy[static_cast<std::size_t>(v)] = true;
            ++report.count;
        }
    }
    report.ratio = n == 0 ? 0.0 : static_cast<double>(report.count) / static_cast<double>(n);
    return report;
}

std::int64_t happy_count(const Graph& graph, const PartialColouring& colouring, const Fraction& rho) {
    check_sizes(graph, colouring);
    check_rho(rho);
    const auto n = graph.vertex_count();
    const auto& colours = colouring.labels();
    std::int64_t count = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (colours[static_cast<std::size_t>(v)] == 0) continue;
        count += same_colour_count(graph, colours, v) >= rho.ceil_mul(graph.degree(v));
    }
    return count;
}

} // namespace happycol
