#include "happycol/colouring.hpp"

#include <algorithm>
#include <string>

namespace happycol {

PartialColouring::PartialColouring(std::int64_t n, Colour k) : colours_(static_cast<std::size_t>(n), 0), k_(k) {
    if (n < 0) throw ParameterError("vertex count must be non-negative");
    if (k < 1) throw ParameterError("colour count must be at least 1");
}

PartialColouring PartialColouring::from_labels(std::vector<Colour> labels, Colour k) {
    if (k < 1) throw ParameterError("colour count must be at least 1");
    for (Colour c : labels)
        if (c < 0 || c > k) throw ParameterError("colour " + std::to_string(c) + " outside 0.." + std::to_string(k));
    PartialColouring pc;
    pc.colours_ = std::move(labels);
    pc.k_ = k;
    return pc;
}

void PartialColouring::set_colour(Vertex v, Colour c) {
    if (c < 0 || c > k_) throw ParameterError("colour " + std::to_string(c) + " outside 0.." + std::to_string(k_));
    colours_[check(v)] = c;
}

bool PartialColouring::complete() const {
    return std::find(colours_.begin(), colours_.end(), 0) == colours_.end();
}

std::int64_t PartialColouring::uncoloured_count() const {
    return std::count(colours_.begin(), colours_.end(), 0);
}

CommunityAssignment::CommunityAssignment(std::vector<Colour> labels, Colour k) : labels_(std::move(labels)), k_(k) {
    if (k < 1) throw ParameterError("community count must be at least 1");
    for (Colour c : labels_)
        if (c < 1 || c > k) throw ParameterError("community label " + std::to_string(c) + " outside 1.." + std::to_string(k));
}

Colour CommunityAssignment::community(Vertex v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= labels_.size()) throw std::out_of_range("vertex out of range");
    return labels_[static_cast<std::size_t>(v)];
}

PartialColouring induced_colouring(const CommunityAssignment& assignment) {
    return PartialColouring::from_labels(assignment.labels(), assignment.k());
}

} // namespace happycol
