#pragma once

#include "zgon/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace zgon::oracle {

/// Field tags for the exact solvers. All oracle matrices have 0/±1 entries,
/// so ranks over the rationals and over a large prime field must agree; the
/// verification suites compare the two as a guard against coincidences.
enum class FieldKind { kRational, kPrime };

struct RationalField {
    using Elem = Rat;
    static Elem zero() { return Rat(0); }
    static Elem one() { return Rat(1); }
    static Elem from_int(long long v) { return Rat(v); }
    static bool is_zero(const Elem& e) { return e.numerator() == 0; }
    static Elem add(const Elem& a, const Elem& b) { return a + b; }
    static Elem sub(const Elem& a, const Elem& b) { return a - b; }
    static Elem mul(const Elem& a, const Elem& b) { return a * b; }
    static Elem div(const Elem& a, const Elem& b) { return a / b; }
    static Elem neg(const Elem& a) { return -a; }
};

template <long long P>
struct PrimeField {
    using Elem = long long;
    static Elem zero() { return 0; }
    static Elem one() { return 1; }
    static Elem from_int(long long v) {
        long long r = v % P;
        return r < 0 ? r + P : r;
    }
    static bool is_zero(const Elem& e) { return e == 0; }
    static Elem add(Elem a, Elem b) { return (a + b) % P; }
    static Elem sub(Elem a, Elem b) { return from_int(a - b); }
    static Elem mul(Elem a, Elem b) { return (a * b) % P; }
    static Elem neg(Elem a) { return a == 0 ? 0 : P - a; }
    static Elem div(Elem a, Elem b) {
        if (b == 0) throw std::domain_error("prime field: division by zero");
        return mul(a, pow(b, P - 2));
    }
    static Elem pow(Elem base, long long e) {
        Elem acc = 1;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }
};

using Fp = PrimeField<65521>;

}  // namespace zgon::oracle
