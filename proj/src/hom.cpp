#include "zgon/hom.hpp"

#include <stdexcept>

namespace zgon {

bool left_intersect_nonempty(const Interval& target, const Interval& source, int n) {
    require_in_family(target);
    require_in_family(source);
    const Interval& v = target;
    const Interval& u = source;
    const LiftedPoint after_start{0, succ(u.start)};
    if (n == 0) {
        return v.start <= u.start && after_start <= LiftedPoint{v.winding, v.end} &&
               LiftedPoint{v.winding, v.end} <= lifted_end(u);
    }
    if (n == -1) {
        return v.winding == 1 && after_start <= LiftedPoint{0, v.end} &&
               LiftedPoint{0, v.end} <= lifted_end(u);
    }
    return false;
}

int hom_dim_rep(const Interval& source, const Interval& target) {
    // Both windings succeed only for a projective against itself, so the sum
    // is the dimension.
    return (left_intersect_nonempty(target, source, 0) ? 1 : 0) +
           (left_intersect_nonempty(target, source, -1) ? 1 : 0);
}

std::string to_string(Hammock h) {
    switch (h) {
        case Hammock::kHomPlus: return "Hplus";
        case Hammock::kHomMinus: return "Hminus";
        case Hammock::kProj: return "P";
        case Hammock::kNone: return "None";
        case Hammock::kProjSelf: return "ProjSelf";
    }
    throw std::logic_error("hammock: unknown tag");
}

bool in_hom_plus(const Interval& frame, const Interval& v) {
    if (frame.winding == 0)
        return v.winding == 0 && v.start <= frame.start && succ(frame.start) <= v.end &&
               v.end <= frame.end;
    return v.winding == 1 && frame.end <= v.start && v.start <= frame.start && v.end <= frame.end;
}

bool in_hom_minus(const Interval& frame, const Interval& v) {
    if (frame.winding == 0)
        return v.winding == 0 && frame.start <= v.start && v.start <= pred(frame.end) &&
               v.end >= frame.end;
    return v.winding == 1 && v.start >= frame.start && frame.end <= v.end && v.end <= frame.start;
}

bool in_proj_hammock(const Interval& frame, const Interval& v) {
    if (frame.winding == 0) {
        // For winding-1 targets the 2pi slack makes one inequality of each
        // disjunct automatic, leaving a plain union of half-planes.
        if (v.winding == 1) return v.end >= frame.end || v.start <= frame.start;
        return v.start <= frame.start && v.end >= frame.end;
    }
    return v.winding == 1 && v.start <= frame.start && v.end >= frame.end;
}

Hammock hammock_classify(const Interval& source, const Interval& target) {
    require_in_family(source);
    require_in_family(target);
    const DerivedIntervals d = derived(source);
    if (in_proj_hammock(d.proj_frame, target)) return Hammock::kProj;
    if (d.shift_inv && in_hom_minus(*d.shift_inv, target)) return Hammock::kHomMinus;
    if (in_hom_plus(source, target)) return Hammock::kHomPlus;
    return Hammock::kNone;
}

int proj_factor_dim(const Interval& source, const Interval& target) {
    if (source == target && is_projective(source)) return 2;
    return hammock_classify(source, target) == Hammock::kProj ? 1 : 0;
}

HomReport make_hom_report(const Interval& source, const Interval& target) {
    HomReport r;
    r.dim_rep = hom_dim_rep(source, target);
    r.dim_proj = proj_factor_dim(source, target);
    r.dim_stable = r.dim_rep - r.dim_proj;
    if (source == target && is_projective(source))
        r.hammock = Hammock::kProjSelf;
    else
        r.hammock = hammock_classify(source, target);
    return r;
}

}  // namespace zgon
