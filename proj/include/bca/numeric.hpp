#ifndef BCA_NUMERIC_HPP_
#define BCA_NUMERIC_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace bca {

// Arbitrary-precision integers and exact rationals. All register values,
// counter increments and bound constants use these; no floating point is
// involved in any certified comparison.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Ceiling of a nonnegative rational, as an Int.
inline Int ceil_rational(const Rational& r) {
    Int num = numerator(r);
    Int den = denominator(r);
    Int q = num / den;
    if (q * den != num && num > 0) ++q;
    return q;
}

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace bca

#endif  // BCA_NUMERIC_HPP_
