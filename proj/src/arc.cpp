#include "zgon/arc.hpp"

#include "zgon/hom.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace zgon {

namespace {

long long half_of_even(long long n) {
    // n is guaranteed even; plain division is exact for either sign.
    return n / 2;
}

bool try_arc_to_interval(const Arc& a, Interval& out) {
    if (((a.hi.index - a.lo.index) & 1LL) == 0) return false;
    Interval u;
    if (a.hi.index % 2 != 0) {  // odd hi index: winding-0 interval
        u.start = Point{a.lo.copy, half_of_even(a.lo.index)};
        u.end = Point{a.hi.copy, half_of_even(a.hi.index + 1)};
        u.winding = 0;
    } else {  // even hi index: winding-1 interval
        u.start = Point{a.hi.copy, half_of_even(a.hi.index)};
        u.end = Point{a.lo.copy, half_of_even(a.lo.index + 1)};
        u.winding = 1;
    }
    if (!in_interval_family(u) || is_projective(u)) return false;
    out = u;
    return true;
}

}  // namespace

bool is_admissible(const Arc& a) {
    Interval ignored;
    return try_arc_to_interval(a, ignored);
}

void require_admissible(const Arc& a) {
    if (!is_admissible(a)) throw std::domain_error("arc: not admissible");
}

bool admissible_closed_form(const Arc& a) {
    const bool odd = ((a.hi.index - a.lo.index) & 1LL) != 0;
    return odd && a.hi >= succ(a.lo);
}

Arc interval_to_arc(const Interval& u) {
    require_in_family(u);
    if (is_projective(u))
        throw std::domain_error("interval_to_arc: projectives have no arc (they vanish stably)");
    if (u.winding == 0)
        return Arc{Point{u.end.copy, 2 * u.end.index - 1}, Point{u.start.copy, 2 * u.start.index}};
    return Arc{Point{u.start.copy, 2 * u.start.index}, Point{u.end.copy, 2 * u.end.index - 1}};
}

Interval arc_to_interval(const Arc& a) {
    Interval u;
    if (!try_arc_to_interval(a, u)) throw std::domain_error("arc_to_interval: arc not admissible");
    return u;
}

Arc shift_arc(const Arc& a, long long k) {
    require_admissible(a);
    return Arc{Point{a.hi.copy, a.hi.index - k}, Point{a.lo.copy, a.lo.index - k}};
}

Arc tau_arc(const Arc& a) { return shift_arc(a, -2); }

int hom_dim_stable(const Arc& a, const Arc& b) {
    const Hammock h = hammock_classify(arc_to_interval(a), arc_to_interval(b));
    return (h == Hammock::kHomPlus || h == Hammock::kHomMinus) ? 1 : 0;
}

namespace {

bool arc_in_hom_plus(const Arc& a, const Arc& b) {
    return (((b.hi.index - a.hi.index) & 1LL) == 0) && succ(a.lo) <= b.hi && b.hi <= a.hi &&
           b.lo <= a.lo;
}

bool arc_in_hom_minus(const Arc& frame, const Arc& b) {
    return (((b.hi.index - frame.hi.index) & 1LL) == 0) && b.hi >= frame.hi && frame.lo <= b.lo &&
           b.lo <= pred(frame.hi);
}

}  // namespace

int arc_hom_closed_form(const Arc& a, const Arc& b) {
    require_admissible(a);
    require_admissible(b);
    return (arc_in_hom_plus(a, b) || arc_in_hom_minus(shift_arc(a, -1), b)) ? 1 : 0;
}

bool serre_dual_check(const Arc& a, const Arc& b) {
    return hom_dim_stable(a, b) == hom_dim_stable(b, shift_arc(a, -1));
}

bool compose_nonzero_stable(const Arc& a, const Arc& b, const Arc& c) {
    if (hom_dim_stable(a, b) != 1 || hom_dim_stable(b, c) != 1)
        throw std::domain_error(
            "compose_nonzero_stable: consecutive Hom spaces must be one-dimensional");
    const Interval ua = arc_to_interval(a);
    const Interval ub = arc_to_interval(b);
    const Interval uc = arc_to_interval(c);
    const Hammock ab = hammock_classify(ua, ub);
    const Hammock ac = hammock_classify(ua, uc);
    const Hammock bc = hammock_classify(ub, uc);
    using enum Hammock;
    if (ab == kHomPlus && ac == kHomPlus && bc == kHomPlus) return true;
    if (ab == kHomPlus && ac == kHomMinus && bc == kHomMinus) return true;
    if (ab == kHomMinus && ac == kHomMinus && bc == kHomPlus) return true;
    return false;
}

AlmostSplitTriangle almost_split_triangle(const Arc& a) {
    require_admissible(a);
    AlmostSplitTriangle t;
    t.right = a;
    t.left = tau_arc(a);
    const Arc upper{Point{a.hi.copy, a.hi.index + 2}, a.lo};  // hi raised, lo kept
    if (a.hi == succ(a.lo))
        t.middle = {upper};
    else
        t.middle = {Arc{a.hi, Point{a.lo.copy, a.lo.index + 2}}, upper};
    t.left_shifted = shift_arc(t.left, 1);
    return t;
}

bool irreducible_stable(const Arc& a, const Arc& b) {
    require_admissible(a);
    require_admissible(b);
    const Arc drop_lo{a.hi, Point{a.lo.copy, a.lo.index - 2}};
    const Arc drop_hi{Point{a.hi.copy, a.hi.index - 2}, a.lo};
    return b == drop_lo || b == drop_hi;
}

std::vector<int> spherical_profile(const Arc& a, long long n_lo, long long n_hi) {
    require_admissible(a);
    if (n_lo > n_hi) throw std::invalid_argument("spherical_profile: empty range");
    std::vector<int> dims;
    dims.reserve(static_cast<size_t>(n_hi - n_lo + 1));
    for (long long n = n_lo; n <= n_hi; ++n) dims.push_back(hom_dim_stable(a, shift_arc(a, n)));
    return dims;
}

namespace {

bool within_window(const Arc& a, long long window) {
    return std::llabs(a.hi.index) <= window && std::llabs(a.lo.index) <= window;
}

}  // namespace

std::vector<Arc> thick_closure(const GonConfig& g, const Arc& seed, long long window) {
    g.require_valid();
    if (g.m != 1) throw std::domain_error("thick_closure: only supported for m = 1");
    require_admissible(seed);
    if (window < std::max(std::llabs(seed.hi.index), std::llabs(seed.lo.index)))
        throw std::invalid_argument("thick_closure: window must contain the seed");

    std::set<Arc> have;
    for (long long k = -3 * window; k <= 3 * window; ++k) {
        const Arc s = shift_arc(seed, k);
        if (within_window(s, window)) have.insert(s);
    }

    // Enumerate every admissible arc in the window once; triangles are
    // indexed by their right-hand term.
    std::vector<Arc> universe;
    for (long long hi = -window; hi <= window; ++hi)
        for (long long lo = -window; lo <= window; ++lo) {
            const Arc a{Point{1, hi}, Point{1, lo}};
            if (is_admissible(a)) universe.push_back(a);
        }

    bool changed = true;
    while (changed) {
        changed = false;
        auto add = [&](const Arc& a) {
            if (within_window(a, window) && have.insert(a).second) changed = true;
        };
        // Rotations stay inside a thick subcategory.
        for (const Arc& a : std::vector<Arc>(have.begin(), have.end()))
            for (long long k : {-1LL, 1LL}) {
                const Arc s = shift_arc(a, k);
                if (within_window(s, window)) add(s);
            }
        for (const Arc& right : universe) {
            const AlmostSplitTriangle t = almost_split_triangle(right);
            if (!within_window(t.left, window)) continue;
            const bool left_in = have.count(t.left) > 0;
            const bool right_in = have.count(right) > 0;
            bool mids_known = true, mids_in = true;
            for (const Arc& mid : t.middle) {
                if (!within_window(mid, window)) { mids_known = false; break; }
                if (!have.count(mid)) mids_in = false;
            }
            // Two terms of a triangle give the third; a known middle splits
            // into summands already in the window.
            if (left_in && right_in)
                for (const Arc& mid : t.middle)
                    if (within_window(mid, window)) add(mid);
            if (mids_known && mids_in && left_in) add(right);
            if (mids_known && mids_in && right_in) add(t.left);
        }
    }
    return {have.begin(), have.end()};
}

}  // namespace zgon
