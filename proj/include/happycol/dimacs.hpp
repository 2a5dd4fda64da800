#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "happycol/colouring.hpp"
#include "happycol/graph.hpp"
#include "happycol/sbm.hpp"

namespace happycol {

/// A generated problem instance: graph, ground truth and precolouring.
struct Instance {
    Graph graph;
    CommunityAssignment communities;
    PartialColouring precolouring;
    SbmParams params;
};

/// Builds the instance for `params`: edges from seed, precolouring from the
/// first derived seed (see rng.hpp).
Instance make_instance(const SbmParams& params);

/// DIMACS edge format with metadata comment lines:
///   c happy-sbm v1
///   c params n=.. k=.. p=.. q=.. pcc=.. seed=..
///   p edge <n> <m>
///   e <u> <v>              (1-based, u < v, sorted)
///   c community <v> <label>
///   c precolour <v> <colour>
/// p and q are printed with the shortest decimal that round-trips.
std::string format_instance(const Instance& instance);

Instance parse_instance(std::istream& in, const std::string& context);

void write_instance(const std::filesystem::path& path, const Instance& instance);
Instance read_instance(const std::filesystem::path& path);

} // namespace happycol
