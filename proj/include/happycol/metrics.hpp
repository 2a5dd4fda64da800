#pragma once

#include <cstdint>
#include <string>

#include "happycol/colouring.hpp"
#include "happycol/fraction.hpp"
#include "happycol/graph.hpp"
#include "happycol/sbm.hpp"
#include "happycol/solvers.hpp"

namespace happycol {

/// One evaluated run: everything a results row needs to be reproduced.
struct EvalRecord {
    std::string algo;
    SbmParams params;
    Fraction rho;
    std::int64_t happy_count = 0;
    double happy_ratio = 0.0;
    bool complete_happy = false;
    double community_accuracy = 0.0;
    std::int64_t elapsed_ms = 0;
    bool timed_out = false;
    double xi = 0.0;             // computed with epsilon = n^-2
    bool rho_below_xi = false;
};

/// Fraction of vertices whose colour equals their community label.
/// Uncoloured vertices count as disagreement.
double community_accuracy(const PartialColouring& colouring, const CommunityAssignment& assignment);

/// Aggregates a solve into an EvalRecord. `precolouring` is the solver's
/// input; the result must extend it.
EvalRecord evaluate(const Graph& graph, const CommunityAssignment& assignment,
                    const PartialColouring& precolouring, const SolveResult& result,
                    const Fraction& rho, const SbmParams& params, std::string algo);

} // namespace happycol
