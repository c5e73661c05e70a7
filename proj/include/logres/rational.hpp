#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace logres {

using Integer = mpz_class;
using Rational = mpq_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invariant violations (e.g. a Psi numerator that is not divisible by
// (1-x)^l, or a theorem contradiction). These signal bugs, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational parse_rational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw input_error("invalid rational: '" + s + "'");
    if (q.get_den() == 0)
        throw input_error("zero denominator in rational: '" + s + "'");
    q.canonicalize();
    return q;
}

// Canonical form "p/q" with q > 0, or "p" when q == 1.
inline std::string rational_to_string(const Rational& q) {
    return q.get_str();
}

inline std::string integer_to_string(const Integer& n) {
    return n.get_str();
}

}  // namespace logres
