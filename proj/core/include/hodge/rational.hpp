#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace hodge {

// Arbitrary-precision rational scalar.  Always kept in lowest terms with a
// positive denominator (mpq canonical form).  Division by zero throws
// SingularMatrix instead of tripping the GMP abort handler.
class Q {
public:
    Q() : v_(0) {}
    Q(int n) : v_(n) {}
    Q(long n) : v_(static_cast<signed long>(n)) {}
    Q(long num, long den);
    explicit Q(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Accepts "p" or "p/q" with an optional leading minus, nothing else.
    static Q parse(const std::string& text);

    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Q operator-() const { return Q(mpq_class(-v_)); }
    Q& operator+=(const Q& o) { v_ += o.v_; return *this; }
    Q& operator-=(const Q& o) { v_ -= o.v_; return *this; }
    Q& operator*=(const Q& o) { v_ *= o.v_; return *this; }
    Q& operator/=(const Q& o);

    friend Q operator+(Q a, const Q& b) { return a += b; }
    friend Q operator-(Q a, const Q& b) { return a -= b; }
    friend Q operator*(Q a, const Q& b) { return a *= b; }
    friend Q operator/(Q a, const Q& b) { return a /= b; }

    friend bool operator==(const Q& a, const Q& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Q& a, const Q& b) { return a.v_ != b.v_; }
    friend bool operator<(const Q& a, const Q& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Q& a, const Q& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Q& a, const Q& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Q& a, const Q& b) { return a.v_ >= b.v_; }

    Q inverse() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Q& q);

}  // namespace hodge
