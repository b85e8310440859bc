#include "cliqueroots/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliqueroots {

namespace {

void trim(std::vector<BigInt>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim(coeffs_);
}

Polynomial Polynomial::constant(BigInt value) { return Polynomial({std::move(value)}); }

Polynomial Polynomial::from_clique_counts(const CliqueCounts& counts) {
    return Polynomial(counts.values());
}

const BigInt& Polynomial::coefficient(int i) const {
    static const BigInt zero = 0;
    if (i < 0 || i > degree()) return zero;
    return coeffs_[i];
}

const BigInt& Polynomial::leading_coefficient() const {
    if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

BigInt Polynomial::evaluate_int(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial();
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<int>(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + other.coefficient(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    std::vector<BigInt> out(std::max(coeffs_.size(), other.coeffs_.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) - other.coefficient(i);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * other.coeffs_[j];
    return Polynomial(std::move(out));
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        const BigInt mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) out += mag.str();
        if (i >= 1) out += "x";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

Polynomial disjoint_union_combine(const Polynomial& a, const Polynomial& b) {
    if (a.coefficient(0) != 1 || b.coefficient(0) != 1)
        throw std::invalid_argument("disjoint union combine needs clique polynomials (constant term 1)");
    return a + b - Polynomial::constant(1);
}

BigInt d_clique(const Polynomial& clique_poly) {
    return abs(BigInt(1) - clique_poly.evaluate_int(-1));
}

}  // namespace cliqueroots
