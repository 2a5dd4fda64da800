#include "happycol/metrics.hpp"

#include "happycol/theory.hpp"

namespace happycol {

double community_accuracy(const PartialColouring& colouring, const CommunityAssignment& assignment) {
    if (colouring.size() != assignment.size())
        throw ContractViolation("colouring and assignment lengths differ");
    const auto n = colouring.size();
    std::int64_t agree = 0;
    for (Vertex v = 0; v < n; ++v) agree += colouring.colour(v) == assignment.community(v);
    return n == 0 ? 0.0 : static_cast<double>(agree) / static_cast<double>(n);
}

EvalRecord evaluate(const Graph& graph, const CommunityAssignment& assignment,
                    const PartialColouring& precolouring, const SolveResult& result,
                    const Fraction& rho, const SbmParams& params, std::string algo) {
    for (Vertex v = 0; v < precolouring.size(); ++v)
        if (precolouring.colour(v) != 0 && result.colouring.colour(v) != precolouring.colour(v))
            throw ContractViolation("solver output does not extend its precolouring");

    const auto n = graph.vertex_count();
    EvalRecord record;
    record.algo = std::move(algo);
    record.params = params;
    record.rho = rho;
    record.happy_count = result.happy_count;
    record.happy_ratio = n == 0 ? 0.0 : static_cast<double>(result.happy_count) / static_cast<double>(n);
    record.complete_happy = result.happy_count == n;
    record.community_accuracy = community_accuracy(result.colouring, assignment);
    record.elapsed_ms = result.elapsed_ms;
    record.timed_out = result.timed_out;
    record.xi = xi(static_cast<double>(params.n), static_cast<double>(params.k), params.p, params.q,
                   default_epsilon(static_cast<double>(params.n)));
    record.rho_below_xi = rho.value() < record.xi;
    return record;
}

} // namespace happycol
