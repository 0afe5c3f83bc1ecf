#pragma once

#include "zgon/gon.hpp"
#include "zgon/interval.hpp"

#include <vector>

namespace zgon {

/// A chord of the vertex set: the indecomposables of the stable category.
/// Admissible means it corresponds to a non-projective interval under the
/// coordinate doubling; equivalently hi is at least the successor of lo and
/// the index difference is odd.
struct Arc {
    Point hi;
    Point lo;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

bool is_admissible(const Arc& a);
void require_admissible(const Arc& a);

/// The closed-form admissibility test used by the geometric model; kept
/// separate so tests can pin it against the coordinate-doubling definition.
bool admissible_closed_form(const Arc& a);

/// Coordinate doubling between non-projective intervals and admissible arcs.
Arc interval_to_arc(const Interval& u);       // throws on projectives
Interval arc_to_interval(const Arc& a);       // throws on inadmissible arcs

/// k-fold clockwise rotation: the k-th power of the shift functor.
Arc shift_arc(const Arc& a, long long k);

/// Auslander-Reiten translate; coincides with the double inverse shift.
Arc tau_arc(const Arc& a);

/// Stable Hom dimension (0 or 1), computed through the interval model.
int hom_dim_stable(const Arc& a, const Arc& b);

/// The same dimension from the purely arc-level region inequalities; tests
/// pin it against hom_dim_stable on full windows.
int arc_hom_closed_form(const Arc& a, const Arc& b);

/// Serre duality probe: Hom(a, b) against Hom(b, shift^{-1} a). Always true.
bool serre_dual_check(const Arc& a, const Arc& b);

/// Whether nonzero composable morphisms a -> b -> c have nonzero composite.
/// Requires both consecutive Hom spaces to be one-dimensional.
bool compose_nonzero_stable(const Arc& a, const Arc& b, const Arc& c);

struct AlmostSplitTriangle {
    Arc left;                  // the translate of right
    std::vector<Arc> middle;   // one arc for minimal right terms, else two
    Arc right;
    Arc left_shifted;          // fourth vertex of the triangle
};

AlmostSplitTriangle almost_split_triangle(const Arc& a);

/// Irreducible morphisms move one endpoint down by two.
bool irreducible_stable(const Arc& a, const Arc& b);

/// Hom(a, shift^n a) for n in [n_lo, n_hi].
std::vector<int> spherical_profile(const Arc& a, long long n_lo, long long n_hi);

/// Thick closure of the rotates of `seed` inside the index window: repeated
/// completion of almost split triangles plus closure under rotation and
/// direct summands. Only supported on one copy (m = 1).
std::vector<Arc> thick_closure(const GonConfig& g, const Arc& seed, long long window);

}  // namespace zgon
