#include "zgon/structure.hpp"

#include <algorithm>
#include <stdexcept>

namespace zgon {

bool exists_mono(const Interval& source, const Interval& target) {
    require_in_family(source);
    require_in_family(target);
    if (is_projective(source))
        throw std::domain_error("exists_mono: criterion undefined for a projective source");
    for (int l : {0, -1}) {
        if (left_intersect_nonempty(target, source, l) &&
            lifted_end(source) == LiftedPoint{target.winding + l, target.end})
            return true;
    }
    return false;
}

bool exists_epi(const Interval& source, const Interval& target) {
    require_in_family(source);
    require_in_family(target);
    if (is_projective(target))
        throw std::domain_error("exists_epi: criterion undefined for a projective target");
    return left_intersect_nonempty(target, source, 0) && source.start == target.start;
}

Interval projective_cover(const Interval& u) {
    require_in_family(u);
    return projective_module(u.start);
}

Interval injective_envelope(const Interval& u) {
    require_in_family(u);
    return projective_module(pred(u.end));
}

MiddleTerms middle_terms(const Interval& u, const Interval& v) {
    require_in_family(u);
    require_in_family(v);
    if (is_projective(u)) throw std::domain_error("middle_terms: source must not be projective");
    const Interval down = derived(u).down_translate;
    if (hom_dim_rep(down, v) != 1 || proj_factor_dim(down, v) != 0)
        throw std::domain_error(
            "middle_terms: needs a one-dimensional, projectively reduced Hom from the "
            "down-translate into the target");
    const int l = left_intersect_nonempty(v, down, 0) ? 0 : -1;

    MiddleTerms out;
    out.union_term = Interval{v.start, u.end, u.winding - l};
    require_in_family(out.union_term);
    const Interval meet{u.start, v.end, v.winding + l};
    // The overlap degenerates exactly when its two lifted endpoints agree.
    if (LiftedPoint{meet.winding, meet.end} != LiftedPoint{0, meet.start}) {
        require_in_family(meet);
        out.meet_term = meet;
    }
    return out;
}

CompositionSeries composition_factors(const Interval& u, long long count) {
    require_in_family(u);
    if (count < 1) throw std::invalid_argument("composition_factors: count must be positive");
    CompositionSeries s;
    s.finite = (u.winding == 0 && u.start.copy == u.end.copy);
    if (s.finite) s.total_length = u.end.index - u.start.index;
    long long take = count;
    if (s.total_length) take = std::min(take, *s.total_length);
    Point z = pred(u.end);
    for (long long i = 0; i < take; ++i, z = pred(z)) s.factors.push_back(simple_module(z));
    return s;
}

AlmostSplitSequence almost_split_sequence(const Interval& u) {
    require_in_family(u);
    if (is_projective(u))
        throw std::domain_error("almost_split_sequence: no sequence starts at a projective");
    const DerivedIntervals d = derived(u);
    AlmostSplitSequence seq;
    seq.left = u;
    seq.middle.push_back(*d.left_grown);
    if (d.right_trimmed) seq.middle.push_back(*d.right_trimmed);
    seq.right = d.down_translate;
    return seq;
}

bool irreducible_rep(const Interval& u, const Interval& v) {
    require_in_family(u);
    require_in_family(v);
    const DerivedIntervals d = derived(u);
    return (d.left_grown && v == *d.left_grown) || (d.right_trimmed && v == *d.right_trimmed);
}

bool compose_nonzero(const Interval& u, const Interval& v, const Interval& w) {
    if (u == v || v == w || u == w)
        throw std::domain_error("compose_nonzero: intervals must be pairwise distinct");
    if (hom_dim_rep(u, v) != 1 || hom_dim_rep(v, w) != 1)
        throw std::domain_error("compose_nonzero: consecutive Hom spaces must be one-dimensional");
    const int n1 = left_intersect_nonempty(v, u, 0) ? 0 : -1;
    const int n2 = left_intersect_nonempty(w, v, 0) ? 0 : -1;
    const int n = n1 + n2;
    if (n == -2) return false;  // wound down a full turn: nothing survives
    if (left_intersect_nonempty(w, u, n)) return true;
    if (n == -1) return false;  // composite lift misses; covers the zero cases
    // n == 0 with an empty winding-0 intersection: a nonzero Hom living only
    // at winding -1 is outside every classified pattern.
    if (left_intersect_nonempty(w, u, -1))
        throw std::domain_error("compose_nonzero: winding pattern outside the classified cases");
    return false;  // Hom(u, w) = 0
}

}  // namespace zgon
