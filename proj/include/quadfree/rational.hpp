#ifndef QUADFREE_RATIONAL_HPP
#define QUADFREE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "quadfree/errors.hpp"

namespace quadfree {

// Exact arbitrary-precision arithmetic. Rational is always normalized
// (reduced, positive denominator). No verdict anywhere in the library may
// depend on floating point; everything routes through these types.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rational_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rational_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Floor square root of a nonnegative integer. RadicandNegative otherwise.
inline BigInt isqrt_floor(const BigInt& x) {
    if (x < 0) throw RadicandNegative("integer square root of a negative value");
    return boost::multiprecision::sqrt(x);
}

// Largest integer <= r.
inline BigInt rational_floor(const Rational& r) {
    BigInt n = rational_num(r), d = rational_den(r);
    BigInt m = n / d;
    if (n < 0 && m * d != n) --m;
    return m;
}

inline std::string to_string(const Rational& r) { return r.str(); }

} // namespace quadfree

#endif
