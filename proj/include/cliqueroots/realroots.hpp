#ifndef CLIQUEROOTS_REALROOTS_HPP
#define CLIQUEROOTS_REALROOTS_HPP

#include <vector>

#include "cliqueroots/bigint.hpp"
#include "cliqueroots/polynomial.hpp"

namespace cliqueroots {

// One distinct real root: either an exact rational value or an open isolating
// interval (lo, hi) with rational endpoints containing exactly that root.
struct RealRoot {
    bool exact = false;
    Rational value;  // when exact
    Rational lo;     // when isolated by an interval
    Rational hi;
    int multiplicity = 1;
};

struct RootReport {
    int degree = 0;
    int distinct_real_roots = 0;
    bool all_real = false;
    int multiplicity_at_minus_one = 0;
    std::vector<RealRoot> roots;  // ascending
    // Square-free part of the analyzed polynomial; kept so intervals can be
    // refined after the fact (approximate_roots).
    Polynomial square_free;
};

// P / gcd(P, P'): same distinct roots, all simple.  Result is primitive with
// positive leading coefficient.  Throws on the zero polynomial.
Polynomial square_free_part(const Polynomial& p);

// Number of distinct real roots of p in (lo, hi], decided by Sturm's theorem
// over the square-free part.  Exact for any endpoints, including roots.
int count_real_roots(const Polynomial& p, const Rational& lo, const Rational& hi);

// Largest k such that (x - r)^k divides p; 0 when p(r) != 0 or p = 0.
int multiplicity_at(const Polynomial& p, const Rational& r);

// Full real-root analysis: isolation, multiplicities, all-real verdict.
// All decisions are made on exact integer/rational arithmetic.
RootReport analyze_roots(const Polynomial& p);

// Ascending approximate values, bisecting each isolating interval until its
// width drops below tol.  Exact rational roots pass through unchanged.
std::vector<double> approximate_roots(const RootReport& report, double tol);

// True iff p has at least one real root in [-1, 0).  Every clique polynomial
// must; callers treat a violation as an internal error.
bool has_root_in_unit_negative(const Polynomial& p);

}  // namespace cliqueroots

#endif
