#pragma once

#include "zgon/embedding.hpp"
#include "zgon/gon.hpp"
#include "zgon/interval.hpp"
#include "zgon/rational.hpp"

#include <vector>

namespace zgon::oracle {

/// A finite, strictly increasing list of exact sample angles along the real
/// line, periodic with period one full turn. Per fundamental domain it holds
/// every embedded vertex up to index window+pad, one midpoint per gap, the
/// accumulation angles, and midpoints between each copy's extreme sampled
/// vertices and the neighbouring accumulation angles. Every consecutive pair
/// of samples brackets at most one vertex, so half-open membership is fully
/// visible at the sample level.
class SampleChain {
public:
    static SampleChain build(const GonConfig& g, const Embedding& e, long long window,
                             int pad = 2, int turn_lo = -4, int turn_hi = 4);

    const GonConfig& gon() const { return gon_; }
    const Embedding& embedding() const { return emb_; }
    long long window() const { return window_; }
    int turn_lo() const { return turn_lo_; }
    int turn_hi() const { return turn_hi_; }

    const std::vector<Rat>& base() const { return base_; }        // in [0, 2)
    const std::vector<Rat>& samples() const { return samples_; }  // lifted, sorted

    long long size() const { return static_cast<long long>(samples_.size()); }

    /// Index of an exact sample value, or -1.
    long long index_of(const Rat& x) const;

    /// Lifted angle of an interval endpoint: start at winding n, or end at
    /// winding (interval winding + n).
    Rat lift_start(const Interval& u, int n) const;
    Rat lift_end(const Interval& u, int n) const;

private:
    GonConfig gon_;
    Embedding emb_;
    long long window_ = 0;
    int turn_lo_ = 0, turn_hi_ = 0;
    std::vector<Rat> base_;
    std::vector<Rat> samples_;
};

}  // namespace zgon::oracle
