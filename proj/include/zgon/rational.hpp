#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace zgon {

// Exact scalar used everywhere an angle appears. Angles are stored as
// rational multiples of pi, so a full turn is rat(2) and no irrational
// value is ever materialised.
using Rat = boost::rational<long long>;

inline Rat rat(long long num, long long den = 1) { return Rat(num, den); }

inline Rat full_turn() { return Rat(2); }

// floor(x) for rationals (round toward minus infinity).
inline long long rat_floor(const Rat& x) {
    long long q = x.numerator() / x.denominator();
    if (x.numerator() % x.denominator() != 0 && x.numerator() < 0) --q;
    return q;
}

// Reduce into [0, period).
inline Rat rat_mod(const Rat& x, const Rat& period) {
    Rat q = x / period;
    return x - Rat(rat_floor(q)) * period;
}

inline std::string rat_to_string(const Rat& x) {
    std::string s = std::to_string(x.numerator());
    if (x.denominator() != 1) s += "/" + std::to_string(x.denominator());
    return s;
}

}  // namespace zgon
