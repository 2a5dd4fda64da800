#include "happycol/sbm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "happycol/errors.hpp"
#include "happycol/rng.hpp"

namespace happycol {

namespace {

void validate_common(const SbmParams& params) {
    if (params.n < 2) throw ParameterError("n must be at least 2");
    if (params.k < 2 || params.k > params.n) throw ParameterError("k must satisfy 2 <= k <= n");
    if (!(params.p >= 0.0) || params.p > 1.0) throw ParameterError("p must lie in [0, 1]");
    if (!(params.q >= 0.0) || params.q > 1.0) throw ParameterError("q must lie in [0, 1]");
    if (params.pcc < 0 || params.pcc > params.n / params.k)
        throw ParameterError("pcc must lie in 0..floor(n/k)");
}

std::pair<Graph, CommunityAssignment> sample_impl(const SbmParams& params) {
    const auto sizes = community_sizes(params.n, params.k);
    std::vector<Colour> labels(static_cast<std::size_t>(params.n));
    {
        std::int64_t v = 0;
        for (Colour c = 1; c <= params.k; ++c)
            for (std::int64_t i = 0; i < sizes[static_cast<std::size_t>(c - 1)]; ++i)
                labels[static_cast<std::size_t>(v++)] = c;
    }

    SplitMix64 rng(params.seed);
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(
        0.55 * params.p * static_cast<double>(params.n) * static_cast<double>(params.n) / params.k));
    for (Vertex u = 0; u < params.n; ++u) {
        const Colour cu = labels[static_cast<std::size_t>(u)];
        for (Vertex v = u + 1; v < params.n; ++v) {
            const double prob = cu == labels[static_cast<std::size_t>(v)] ? params.p : params.q;
            if (rng.next_double() < prob) edges.emplace_back(u, v);
        }
    }
    return {Graph::from_edges(params.n, edges), CommunityAssignment(std::move(labels), params.k)};
}

} // namespace

void validate(const SbmParams& params) {
    validate_common(params);
    if (!(params.q > 0.0) || !(params.q < params.p))
        throw ParameterError("edge probabilities must satisfy 0 < q < p <= 1");
}

std::pair<Graph, CommunityAssignment> sample_graph(const SbmParams& params) {
    validate(params);
    return sample_impl(params);
}

std::pair<Graph, CommunityAssignment> sample_graph_relaxed(const SbmParams& params) {
    validate_common(params);
    if (params.q > params.p) throw ParameterError("q must not exceed p");
    return sample_impl(params);
}

PartialColouring sample_precolouring(const CommunityAssignment& assignment, std::int64_t pcc,
                                     std::uint64_t seed) {
    const std::int64_t n = assignment.size();
    PartialColouring colouring(n, assignment.k());
    if (pcc == 0) return colouring;

    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(assignment.k()));
    for (Vertex v = 0; v < n; ++v)
        members[static_cast<std::size_t>(assignment.community(v) - 1)].push_back(v);
    for (const auto& community : members)
        if (pcc > static_cast<std::int64_t>(community.size()))
            throw ParameterError("pcc " + std::to_string(pcc) + " exceeds smallest community size " +
                                 std::to_string(community.size()));

    SplitMix64 rng(seed);
    for (Colour c = 1; c <= assignment.k(); ++c) {
        auto& pool = members[static_cast<std::size_t>(c - 1)];
        // partial Fisher-Yates: the first pcc slots end up a uniform sample
        for (std::int64_t i = 0; i < pcc; ++i) {
            const auto j = i + static_cast<std::int64_t>(
                                   rng.next_below(static_cast<std::uint64_t>(pool.size()) - i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            colouring.set_colour(pool[static_cast<std::size_t>(i)], c);
        }
    }
    return colouring;
}

std::vector<std::int64_t> community_sizes(std::int64_t n, Colour k) {
    if (k < 1 || k > n) throw ParameterError("k must satisfy 1 <= k <= n");
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(k), n / k);
    for (std::int64_t i = 0; i < n % k; ++i) ++sizes[static_cast<std::size_t>(i)];
    return sizes;
}

} // namespace happycol
