#include "hodge/rational.hpp"

#include <cctype>
#include <ostream>

#include "hodge/errors.hpp"

namespace hodge {

Q::Q(long num, long den) {
    if (den == 0) throw SingularMatrix("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Q& Q::operator/=(const Q& o) {
    if (o.is_zero()) throw SingularMatrix("division by zero");
    v_ /= o.v_;
    return *this;
}

Q Q::inverse() const {
    if (is_zero()) throw SingularMatrix("inverse of zero");
    return Q(mpq_class(1) / v_);
}

Q Q::parse(const std::string& text) {
    // Grammar: -?[0-9]+(/[0-9]+)?  with a nonzero denominator.
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) throw ParseError("bad rational literal: '" + text + "'");
    bool has_den = false;
    if (i < text.size() && text[i] == '/') {
        has_den = true;
        ++i;
        digits = 0;
        while (i < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
            ++digits;
        }
        if (digits == 0) throw ParseError("bad rational literal: '" + text + "'");
    }
    if (i != text.size()) throw ParseError("bad rational literal: '" + text + "'");

    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw ParseError("bad rational literal: '" + text + "'");
    if (has_den && sgn(v.get_den()) == 0)
        throw ParseError("zero denominator in '" + text + "'");
    v.canonicalize();
    return Q(v);
}

std::string Q::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Q& q) { return os << q.str(); }

}  // namespace hodge
