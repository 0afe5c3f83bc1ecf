#pragma once

#include "zgon/interval.hpp"
#include "zgon/oracle/chain.hpp"
#include "zgon/oracle/field.hpp"

#include <optional>
#include <vector>

namespace zgon::oracle {

/// The module of a lifted interval restricted to the chain: dimension one on
/// the sample range (lift_start, lift_end], identity transitions inside.
/// Supports are contiguous, so the range [first, last] is the whole story.
struct LineRep {
    long long first = 0;
    long long last = -1;  // empty when last < first
    Rat lo, hi;           // exact half-open endpoints (lo, hi]

    long long size() const { return last - first + 1; }
    bool contains(long long i) const { return first <= i && i <= last; }
};

/// Realise interval + 2n*pi on the chain. Throws std::range_error unless
/// both endpoints are chain samples with at least one sample of margin
/// strictly beyond each (half-open membership must stay decidable).
LineRep realize(const SampleChain& chain, const Interval& u, int n);

/// Dimension of the space of natural transformations between two line
/// realisations, by exact elimination of all commuting-square constraints.
int hom_dim_linear(const SampleChain& chain, const LineRep& source, const LineRep& target,
                   FieldKind field = FieldKind::kRational);

/// Raw left-intersection test evaluated on the rational lifts of the two
/// intervals, straight from the set-level definition: the target's translate
/// must cover the source's lower end, end inside it, and actually meet it.
bool left_intersect_oracle(const GonConfig& g, const Embedding& e, const Interval& target,
                           const Interval& source, int n);

/// Circle Hom dimension via the line reduction: total over all windings in
/// [-3, 3] of the line Hom at that lift. Windings outside {0,-1} are
/// asserted to contribute nothing.
int hom_dim_circle_oracle(const SampleChain& chain, const Interval& source,
                          const Interval& target, FieldKind field = FieldKind::kRational);

/// The standard morphism between two line realisations as a per-sample 0/1
/// family supported on the left intersection; naturality is checked.
struct LineMorphism {
    long long first = 0;
    long long last = -1;  // support range, empty for the zero morphism
    bool supported(long long i) const { return first <= i && i <= last; }
};

LineMorphism standard_morphism(const SampleChain& chain, const Interval& source, int source_n,
                               const Interval& target, int target_n);

/// Dimension of the span of composites through windowed projectives inside
/// the Hom solution space. The window must reach the canonical witness (the
/// projective at the predecessor of the source's end).
int proj_factor_dim_oracle(const SampleChain& chain, const Interval& source,
                           const Interval& target, long long window,
                           FieldKind field = FieldKind::kRational);

/// Whether the composite of the standard morphisms source -> via -> target
/// (at their unique windings) is a nonzero natural transformation.
bool composite_nonzero_oracle(const SampleChain& chain, const Interval& source,
                              const Interval& via, const Interval& target);

/// A string realised over the circle: per base sample, the ascending lifts
/// that fall inside the canonical interval. Fibre dimensions reach 2 only on
/// projectives.
struct CircleRep {
    std::vector<std::vector<Rat>> fibers;  // one ascending list per base sample
    int dim(size_t base_index) const { return static_cast<int>(fibers[base_index].size()); }
};

CircleRep realize_circle(const SampleChain& chain, const Interval& u);

/// Rank-level exactness of 0 -> source -> (middles) -> target -> 0 with the
/// canonical standard morphisms and the fixed sign convention (+,+) into
/// (-,+): per circle sample, the left map must inject, the right map must
/// surject, images must match kernels, and fibre dimensions must add up.
bool exactness_check(const SampleChain& chain, const Interval& source,
                     const std::vector<Interval>& middles, const Interval& target,
                     FieldKind field = FieldKind::kRational);

}  // namespace zgon::oracle
