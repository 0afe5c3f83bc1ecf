#pragma once

#include "zgon/gon.hpp"

#include <compare>
#include <optional>

namespace zgon {

/// The half-open interval (start, end + 2*winding*pi] with vertex endpoints.
/// Membership in the admissible interval family forces winding to be 0 or 1:
///   winding = 0  requires  end >= succ(start)      (shortest: a simple)
///   winding = 1  requires  end <= succ(start)      (longest: a projective)
/// Each such interval names one indecomposable representation; the two
/// extremes are the simple and the projective-injective at `start`.
struct Interval {
    Point start;
    Point end;
    int winding = 0;

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// A vertex lifted to the universal cover: base + 2*winding*pi. All base
/// angles share one fundamental domain, so comparing (winding, base)
/// lexicographically is exactly the order of the real line.
struct LiftedPoint {
    int winding = 0;
    Point base;

    friend auto operator<=>(const LiftedPoint&, const LiftedPoint&) = default;
};

inline LiftedPoint lifted_end(const Interval& u) { return {u.winding, u.end}; }

inline bool in_interval_family(const Interval& u) {
    if (u.winding == 0) return u.end >= succ(u.start);
    if (u.winding == 1) return u.end <= succ(u.start);
    return false;
}

inline bool is_simple(const Interval& u) { return u.winding == 0 && u.end == succ(u.start); }
inline bool is_projective(const Interval& u) { return u.winding == 1 && u.end == succ(u.start); }

inline Interval simple_module(const Point& z) { return {z, succ(z), 0}; }
inline Interval projective_module(const Point& z) { return {z, succ(z), 1}; }

void require_in_family(const Interval& u);  // throws std::domain_error

/// The six neighbours an interval determines. The two one-step enlargements
/// feed the almost split sequence (they are its middle terms), the double
/// predecessor is its right-hand end, the two shifts realise the suspension
/// after stabilising, and proj_frame is the interval whose projective
/// hammock cuts out every morphism factoring through a projective.
struct DerivedIntervals {
    std::optional<Interval> left_grown;     // (start^-, end]; absent iff projective
    std::optional<Interval> right_trimmed;  // (start, end^-]; absent iff simple
    Interval down_translate;                // (start^-, end^-]
    std::optional<Interval> shift;          // absent iff projective
    std::optional<Interval> shift_inv;      // absent iff projective
    Interval proj_frame;
};

DerivedIntervals derived(const Interval& u);

}  // namespace zgon
