#ifndef CLIQUEROOTS_POLYNOMIAL_HPP
#define CLIQUEROOTS_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "cliqueroots/bigint.hpp"
#include "cliqueroots/cliques.hpp"

namespace cliqueroots {

// Univariate polynomial with exact integer coefficients, index = degree.
// The zero polynomial has an empty coefficient list and degree -1; otherwise
// the leading coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigInt> coefficients);

    static Polynomial constant(BigInt value);
    // Coefficients read straight off the clique counts.
    static Polynomial from_clique_counts(const CliqueCounts& counts);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // c_i for any i >= 0; zero beyond the degree.
    const BigInt& coefficient(int i) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }
    const BigInt& leading_coefficient() const;

    Rational evaluate(const Rational& x) const;
    BigInt evaluate_int(const BigInt& x) const;
    Polynomial derivative() const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const = default;

    // Human-readable form, e.g. "1 + 4x + 4x^2 + x^3".
    std::string to_string() const;

private:
    std::vector<BigInt> coeffs_;
};

// C(G1 u G2) = C(G1) + C(G2) - 1: every nonempty clique lives entirely in one
// side.  Both inputs must have constant term 1.
Polynomial disjoint_union_combine(const Polynomial& a, const Polynomial& b);

// |#odd-size cliques - #even-size cliques| over sizes i >= 1, which is
// exactly |1 - P(-1)|.
BigInt d_clique(const Polynomial& clique_poly);

}  // namespace cliqueroots

#endif
