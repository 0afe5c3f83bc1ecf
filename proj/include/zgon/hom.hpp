#pragma once

#include "zgon/interval.hpp"

#include <string>

namespace zgon {

/// Does the 2n*pi-translate of `target` meet `source` "from the left"?
/// Nonempty left intersection is exactly the existence of a nonzero standard
/// morphism out of the module on `source` into the translate of the module
/// on `target`. Only n = 0 and n = -1 can ever succeed.
bool left_intersect_nonempty(const Interval& target, const Interval& source, int n);

/// Hom dimension between the modules on `source` and `target`: 0, 1, or 2,
/// with 2 exactly at a projective paired with itself.
int hom_dim_rep(const Interval& source, const Interval& target);

enum class Hammock {
    kHomPlus,   // winding-preserving morphisms
    kHomMinus,  // winding-dropping morphisms (through the suspension's tail)
    kProj,      // everything factors through a projective
    kNone,      // no morphism at all
    kProjSelf,  // the two-dimensional self-endomorphisms of a projective
};

std::string to_string(Hammock h);

// Raw membership tests, straight from the region definitions. `frame` is the
// interval whose hammock is being tested (the caller supplies the suspended
// or projective frame as appropriate).
bool in_hom_plus(const Interval& frame, const Interval& v);
bool in_hom_minus(const Interval& frame, const Interval& v);
bool in_proj_hammock(const Interval& frame, const Interval& v);

/// Which of the three disjoint regions of `source` the interval `target`
/// lies in (kNone when Hom vanishes). The projective self-pair classifies as
/// kProj: its whole endomorphism space factors through a projective.
Hammock hammock_classify(const Interval& source, const Interval& target);

/// Dimension of the space of morphisms factoring through a projective:
/// positive exactly on the projective hammock, and 2 on the self-pair.
int proj_factor_dim(const Interval& source, const Interval& target);

/// Structured answer to a Hom query between two intervals.
struct HomReport {
    int dim_rep = 0;
    int dim_proj = 0;
    int dim_stable = 0;
    Hammock hammock = Hammock::kNone;

    friend bool operator==(const HomReport&, const HomReport&) = default;
};

HomReport make_hom_report(const Interval& source, const Interval& target);

}  // namespace zgon
