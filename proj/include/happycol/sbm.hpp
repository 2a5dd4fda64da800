#pragma once

#include <cstdint>
#include <utility>

#include "happycol/colouring.hpp"
#include "happycol/graph.hpp"

namespace happycol {

/// Parameters of one G(n,k,p,q) instance plus its precolouring size and seed.
struct SbmParams {
    std::int64_t n = 0;     // vertices, >= 2
    Colour k = 2;           // communities, 2 <= k <= n
    double p = 0.0;         // intra-community edge probability, in (0, 1]
    double q = 0.0;         // inter-community edge probability, in (0, p)
    std::int64_t pcc = 0;   // precoloured vertices per community, <= floor(n/k)
    std::uint64_t seed = 0;
};

/// Throws ParameterError unless 0 < q < p <= 1, 2 <= k <= n, 0 <= pcc <= floor(n/k).
void validate(const SbmParams& params);

/// Samples a graph and its ground-truth communities.
///
/// Vertices 0..n-1 are grouped into contiguous community blocks (the first
/// n mod k communities get one extra vertex). Unordered pairs are visited in
/// lexicographic order, one uniform draw each, with threshold p inside a
/// community and q across. The same params (including seed) reproduce the
/// graph bit for bit.
std::pair<Graph, CommunityAssignment> sample_graph(const SbmParams& params);

/// Same sampler with the 0 < q < p check relaxed (0 <= q <= p <= 1), so tests
/// can pin the deterministic endpoints q=0, p=q and p=1.
std::pair<Graph, CommunityAssignment> sample_graph_relaxed(const SbmParams& params);

/// Uniformly picks pcc vertices per community, without replacement, and
/// colours each with its community label; everything else stays uncoloured.
PartialColouring sample_precolouring(const CommunityAssignment& assignment, std::int64_t pcc,
                                     std::uint64_t seed);

/// Community sizes in community order (balanced to within one vertex).
std::vector<std::int64_t> community_sizes(std::int64_t n, Colour k);

} // namespace happycol
