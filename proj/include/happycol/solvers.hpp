#pragma once

#include <cstdint>
#include <vector>

#include "happycol/colouring.hpp"
#include "happycol/fraction.hpp"
#include "happycol/graph.hpp"

namespace happycol {

struct SolverConfig {
    Fraction rho;                    // happiness proportion in [0, 1]
    std::uint64_t seed = 0;          // drives every random choice
    std::int64_t time_limit_ms = 0;  // 0 = unlimited
    bool deterministic = false;      // lowest-id / lowest-colour choices instead of seeded
};

struct SolveResult {
    PartialColouring colouring;      // complete unless timed_out
    std::int64_t happy_count = 0;    // rho-happy vertices in `colouring`
    std::int64_t elapsed_ms = 0;
    bool timed_out = false;
    std::uint64_t work_counter = 0;  // neighbourhood tallies performed (see docs)
};

/// Classification of vertices under a partial colouring, used by the growth
/// solver. Coloured vertices are Happy, Doomed or Potential; uncoloured ones
/// fall into one of the Fringe classes or are Isolated from all colour.
enum class VertexClass : std::uint8_t {
    Happy,            // coloured and rho-happy
    Doomed,           // coloured; even colouring every uncoloured neighbour cannot help
    Potential,        // coloured, unhappy, but enough uncoloured neighbours to fix
    FringePotential,  // uncoloured, adjacent to a Potential vertex
    FringeViable,     // uncoloured, adjacent to settled colour, can still become happy
    FringeDoomed,     // uncoloured, adjacent to settled colour, cannot become happy
    Isolated,         // uncoloured with no coloured neighbour
};

std::vector<VertexClass> classify_vertices(const Graph& graph, const PartialColouring& partial,
                                           const Fraction& rho);

/// Completes the partial colouring by giving every uncoloured vertex the one
/// colour that maximises the number of rho-happy vertices (ties -> lowest).
SolveResult greedy_soft_mhv(const Graph& graph, const PartialColouring& partial, const SolverConfig& config);

/// Like greedy, but per round only the uncoloured neighbours of the winning
/// colour class receive it; repeats until everything is coloured.
SolveResult ngc(const Graph& graph, const PartialColouring& partial, const SolverConfig& config);

/// Local maximal colouring: repeatedly colours a frontier vertex with the
/// most frequent colour among its coloured neighbours.
SolveResult lmc(const Graph& graph, const PartialColouring& partial, const SolverConfig& config);

/// Grows happy neighbourhoods from Potential vertices, then from the fringe,
/// reclassifying after every assignment batch.
SolveResult growth_soft_mhv(const Graph& graph, const PartialColouring& partial, const SolverConfig& config);

struct OracleResult {
    PartialColouring colouring;  // a maximiser; lexicographically smallest on ties
    std::int64_t max_happy = 0;
};

/// Exhaustive search over all completions. Refuses when k^uncoloured > 10^7.
OracleResult exact_oracle(const Graph& graph, const PartialColouring& partial, const Fraction& rho);

} // namespace happycol
