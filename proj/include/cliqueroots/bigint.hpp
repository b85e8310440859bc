#ifndef CLIQUEROOTS_BIGINT_HPP
#define CLIQUEROOTS_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cliqueroots {

// Exact arithmetic everywhere in the core; doubles appear only when a
// report asks for approximate root values.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

// "p" when integral, "p/q" otherwise.
inline std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

inline double rational_to_double(const Rational& q) { return q.template convert_to<double>(); }

inline int sign_of(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

inline int sign_of(const BigInt& v) {
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

}  // namespace cliqueroots

#endif
