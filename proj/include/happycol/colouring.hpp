#pragma once

#include <cstdint>
#include <vector>

#include "happycol/errors.hpp"
#include "happycol/graph.hpp"

namespace happycol {

using Colour = std::int32_t; // 0 = uncoloured, valid colours are 1..k

/// Per-vertex colours in {0, 1, ..., k}. A complete colouring has no zeros.
class PartialColouring {
public:
    PartialColouring() = default;

    /// All-uncoloured over n vertices and k permissible colours.
    PartialColouring(std::int64_t n, Colour k);

    /// Adopts a label vector, validating every entry against k.
    static PartialColouring from_labels(std::vector<Colour> labels, Colour k);

    Colour k() const { return k_; }
    std::int64_t size() const { return static_cast<std::int64_t>(colours_.size()); }

    Colour colour(Vertex v) const { return colours_[check(v)]; }
    bool is_coloured(Vertex v) const { return colours_[check(v)] != 0; }

    void set_colour(Vertex v, Colour c);

    bool complete() const;
    std::int64_t uncoloured_count() const;

    const std::vector<Colour>& labels() const { return colours_; }

    friend bool operator==(const PartialColouring& a, const PartialColouring& b) = default;

private:
    std::size_t check(Vertex v) const {
        if (v < 0 || static_cast<std::size_t>(v) >= colours_.size())
            throw std::out_of_range("vertex out of range");
        return static_cast<std::size_t>(v);
    }

    std::vector<Colour> colours_;
    Colour k_ = 1;
};

/// Ground-truth community label per vertex, labels 1..k.
class CommunityAssignment {
public:
    CommunityAssignment() = default;
    CommunityAssignment(std::vector<Colour> labels, Colour k);

    Colour k() const { return k_; }
    std::int64_t size() const { return static_cast<std::int64_t>(labels_.size()); }
    Colour community(Vertex v) const;
    const std::vector<Colour>& labels() const { return labels_; }

private:
    std::vector<Colour> labels_;
    Colour k_ = 1;
};

/// The colouring that assigns every vertex its community label.
PartialColouring induced_colouring(const CommunityAssignment& assignment);

} // namespace happycol
