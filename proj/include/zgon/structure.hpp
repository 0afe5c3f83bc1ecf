#pragma once

#include "zgon/hom.hpp"
#include "zgon/interval.hpp"

#include <optional>
#include <vector>

namespace zgon {

/// Monomorphism criterion: a lift of the target must meet the source from
/// the left with matching right-hand endpoints. Only stated away from the
/// projective source, so that case throws.
bool exists_mono(const Interval& source, const Interval& target);

/// Epimorphism criterion: matching left endpoints plus a winding-0 left
/// intersection. Only stated away from the projective target.
bool exists_epi(const Interval& source, const Interval& target);

Interval projective_cover(const Interval& u);    // the projective at start
Interval injective_envelope(const Interval& u);  // the projective at end^-

/// Middle terms of the canonical short exact sequence with outer terms the
/// modules on `u` and `v`. Defined under: u non-projective, Hom from the
/// down-translate of u into v one-dimensional with nothing factoring through
/// a projective. union_term is the overlay of the two intervals, meet_term
/// their overlap (absent when the overlap is empty).
struct MiddleTerms {
    Interval union_term;
    std::optional<Interval> meet_term;

    friend bool operator==(const MiddleTerms&, const MiddleTerms&) = default;
};

MiddleTerms middle_terms(const Interval& u, const Interval& v);

/// Leading composition factors, counted from the socle upward.
struct CompositionSeries {
    std::vector<Interval> factors;           // simples, socle first
    bool finite = false;
    std::optional<long long> total_length;   // set iff finite
};

CompositionSeries composition_factors(const Interval& u, long long count);

/// The almost split sequence starting at a non-projective interval: middle
/// has two summands in general, one when the interval is simple.
struct AlmostSplitSequence {
    Interval left;
    std::vector<Interval> middle;
    Interval right;
};

AlmostSplitSequence almost_split_sequence(const Interval& u);

/// Is there an irreducible morphism from u to v? Exactly the two one-step
/// moves: grow the start down or trim the end down.
bool irreducible_rep(const Interval& u, const Interval& v);

/// Whether the composite of nonzero morphisms u -> v -> w is nonzero.
/// Requires pairwise distinct intervals with both consecutive Hom spaces
/// one-dimensional; winding patterns outside the classified cases throw.
bool compose_nonzero(const Interval& u, const Interval& v, const Interval& w);

}  // namespace zgon
