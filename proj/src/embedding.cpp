#include "zgon/embedding.hpp"

#include <cstdlib>

namespace zgon {

Rat Embedding::squash_value(long long n) const {
    long long a = n < 0 ? -n : n;
    switch (squash_) {
        case Squash::kHarmonic: return Rat(n, 1 + a);
        case Squash::kSoft: return Rat(n, 2 + a);
    }
    throw std::logic_error("embedding: unknown squash kind");
}

Rat Embedding::angle(const GonConfig& g, const Point& z) const {
    g.require_point(z);
    // 2(p-1)/m + (1 + squash(n))/m, as a multiple of pi. squash in (-1,1)
    // keeps the value strictly inside the copy's arc (2(p-1)/m, 2p/m).
    return Rat(2 * (z.copy - 1), g.m) + (Rat(1) + squash_value(z.index)) / Rat(g.m);
}

Rat Embedding::boundary_angle(const GonConfig& g, int p) const {
    g.require_valid();
    if (p < 1 || p > g.m + 1) throw std::invalid_argument("embedding: boundary index out of range");
    return Rat(2 * (p - 1), g.m);
}

bool Embedding::max_vertex_at_or_below(const GonConfig& g, int copy, const Rat& s, Point& out) const {
    // The squash maps are monotone, so bracket by doubling and then bisect.
    // The doubling cap classifies pathological embeddings whose image does
    // not reach down to s as "no vertex below" rather than looping forever;
    // it also keeps the step within long long range.
    constexpr int kMaxDoublings = 62;
    auto at = [&](long long n) { return angle(g, Point{copy, n}); };

    long long lo;  // some index with angle(lo) <= s
    if (at(0) <= s) {
        lo = 0;
    } else {
        long long step = 1;
        int tries = 0;
        while (at(-step) > s) {
            if (++tries > kMaxDoublings) return false;
            step *= 2;
        }
        lo = -step;
    }
    long long hi = lo;  // some index with angle(hi) > s
    {
        long long step = 1;
        int tries = 0;
        while (at(hi) <= s) {
            hi = lo + step;
            step *= 2;
            if (++tries > kMaxDoublings) return false;
        }
    }
    while (hi - lo > 1) {
        long long mid = lo + (hi - lo) / 2;
        (at(mid) <= s ? lo : hi) = mid;
    }
    out = Point{copy, lo};
    return true;
}

Rat kupisch(const GonConfig& g, const Embedding& e, const Rat& t) {
    g.require_valid();
    const Rat s = rat_mod(t, full_turn());  // into [0, 2)

    for (int p = 1; p <= g.m; ++p)
        if (s == e.boundary_angle(g, p)) return full_turn();

    // s lies strictly inside the arc of exactly one copy.
    int copy = static_cast<int>(rat_floor(s * Rat(g.m) / Rat(2))) + 1;

    Point z;
    if (!e.max_vertex_at_or_below(g, copy, s, z)) return full_turn();
    return full_turn() + e.angle(g, succ(z)) - s;
}

}  // namespace zgon
