#include "zgon/oracle/chain.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zgon::oracle {

SampleChain SampleChain::build(const GonConfig& g, const Embedding& e, long long window,
                               int pad, int turn_lo, int turn_hi) {
    g.require_valid();
    if (window < 0 || pad < 1 || turn_lo > turn_hi)
        throw std::invalid_argument("sample chain: bad configuration");

    SampleChain c;
    c.gon_ = g;
    c.emb_ = e;
    c.window_ = window;
    c.turn_lo_ = turn_lo;
    c.turn_hi_ = turn_hi;

    std::set<Rat> base;
    const long long reach = window + pad;
    for (int p = 1; p <= g.m; ++p) {
        base.insert(e.boundary_angle(g, p));
        Rat prev = e.boundary_angle(g, p);
        for (long long n = -reach; n <= reach; ++n) {
            const Rat a = e.angle(g, Point{p, n});
            base.insert((prev + a) / Rat(2));  // midpoint of the preceding gap
            base.insert(a);
            prev = a;
        }
        base.insert((prev + e.boundary_angle(g, p + 1)) / Rat(2));
    }

    c.base_.assign(base.begin(), base.end());
    c.samples_.reserve(c.base_.size() * static_cast<size_t>(turn_hi - turn_lo + 1));
    for (int k = turn_lo; k <= turn_hi; ++k)
        for (const Rat& b : c.base_) c.samples_.push_back(b + Rat(2 * k));
    return c;
}

long long SampleChain::index_of(const Rat& x) const {
    auto it = std::lower_bound(samples_.begin(), samples_.end(), x);
    if (it == samples_.end() || *it != x) return -1;
    return it - samples_.begin();
}

Rat SampleChain::lift_start(const Interval& u, int n) const {
    return emb_.angle(gon_, u.start) + Rat(2 * n);
}

Rat SampleChain::lift_end(const Interval& u, int n) const {
    return emb_.angle(gon_, u.end) + Rat(2 * (u.winding + n));
}

}  // namespace zgon::oracle
