#pragma once

#include <iosfwd>
#include <ostream>

#include "hodge/errors.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// Dual number a + b*eps with eps^2 = 0.  Running an exact computation over
// DQ instead of Q yields the value together with its derivative along one
// tangent direction.  Invertible iff the value part is nonzero.
struct DQ {
    Q a;  // value
    Q b;  // derivative

    DQ() = default;
    DQ(const Q& a) : a(a), b(0) {}
    DQ(const Q& a, const Q& b) : a(a), b(b) {}
    DQ(int n) : a(n), b(0) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    DQ operator-() const { return DQ(-a, -b); }
    DQ& operator+=(const DQ& o) { a += o.a; b += o.b; return *this; }
    DQ& operator-=(const DQ& o) { a -= o.a; b -= o.b; return *this; }
    DQ& operator*=(const DQ& o) {
        b = a * o.b + b * o.a;
        a *= o.a;
        return *this;
    }
    DQ& operator/=(const DQ& o) {
        if (o.a.is_zero()) throw SingularMatrix("dual division by non-unit");
        // (a + b eps) / (c + d eps) = a/c + (b c - a d)/c^2 eps
        b = (b * o.a - a * o.b) / (o.a * o.a);
        a /= o.a;
        return *this;
    }

    friend DQ operator+(DQ x, const DQ& y) { return x += y; }
    friend DQ operator-(DQ x, const DQ& y) { return x -= y; }
    friend DQ operator*(DQ x, const DQ& y) { return x *= y; }
    friend DQ operator/(DQ x, const DQ& y) { return x /= y; }
    friend bool operator==(const DQ& x, const DQ& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const DQ& x, const DQ& y) { return !(x == y); }
};

inline std::ostream& operator<<(std::ostream& os, const DQ& x) {
    return os << x.a << "+" << x.b << "e";
}

// Scalar concept hooks shared by Q and DQ.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Q> {
    static Q zero() { return Q(0); }
    static Q one() { return Q(1); }
    // Usable as a pivot / divisor.
    static bool is_unit(const Q& x) { return !x.is_zero(); }
};

template <>
struct scalar_traits<DQ> {
    static DQ zero() { return DQ(0); }
    static DQ one() { return DQ(1); }
    static bool is_unit(const DQ& x) { return !x.a.is_zero(); }
};

}  // namespace hodge
