#pragma once

#include "zgon/gon.hpp"
#include "zgon/rational.hpp"

namespace zgon {

/// Order-preserving realisation of the vertex set inside (0, 2pi), with the
/// image of copy p contained in the open arc (2pi(p-1)/m, 2pi p/m). Angles
/// are rational multiples of pi. Only the order type of the image carries
/// meaning; everything combinatorial must be invariant under swapping the
/// squashing map (the verification suites re-run with kSoft to enforce this).
class Embedding {
public:
    enum class Squash {
        kHarmonic,  // n -> n / (1 + |n|), the default
        kSoft,      // n -> n / (2 + |n|), alternative used for order-type tests
    };

    explicit Embedding(Squash squash = Squash::kHarmonic) : squash_(squash) {}

    Squash squash() const { return squash_; }

    /// Angle of a vertex as a multiple of pi, strictly inside its copy's arc.
    Rat angle(const GonConfig& g, const Point& z) const;

    /// Angle of the accumulation point p in [1..m+1] (p = m+1 wraps to 2pi).
    Rat boundary_angle(const GonConfig& g, int p) const;

    /// Largest vertex of copy `copy` whose angle is <= s, if any. `s` must
    /// lie inside the copy's open arc.
    bool max_vertex_at_or_below(const GonConfig& g, int copy, const Rat& s, Point& out) const;

private:
    Rat squash_value(long long n) const;  // strictly increasing into (-1, 1)
    Squash squash_;
};

/// Maximal-interval-length prescription: at the angle of a vertex z it
/// returns 2pi + angle(z^+) - s for s in [z, z^+), and a full 2pi at the
/// accumulation points (and in any region not reachable as [z, z^+), which
/// classifies with the accumulation case). 2pi-periodic in its argument.
Rat kupisch(const GonConfig& g, const Embedding& e, const Rat& t);

}  // namespace zgon
