#include "zgon/interval.hpp"

#include <stdexcept>

namespace zgon {

void require_in_family(const Interval& u) {
    if (!in_interval_family(u))
        throw std::domain_error("interval: not a member of the admissible interval family");
}

DerivedIntervals derived(const Interval& u) {
    require_in_family(u);
    DerivedIntervals d;
    const int flip = 1 - u.winding;
    if (!is_projective(u)) {
        d.left_grown = Interval{pred(u.start), u.end, u.winding};
        d.shift = Interval{pred(u.end), u.start, flip};
        d.shift_inv = Interval{u.end, succ(u.start), flip};
    }
    if (!is_simple(u)) d.right_trimmed = Interval{u.start, pred(u.end), u.winding};
    d.down_translate = Interval{pred(u.start), pred(u.end), u.winding};
    d.proj_frame = Interval{pred(u.end), succ(u.start), flip};
    return d;
}

}  // namespace zgon
