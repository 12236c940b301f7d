#pragma once

#include <string>
#include <vector>

#include "voam/rational.hpp"

namespace voam {

/* Univariate polynomial in the central charge c with exact rational
 * coefficients (dense, trailing zeros trimmed; zero is the empty vector). */
class PolyC {
    std::vector<Rational> coeffs_;  // coeffs_[d] multiplies c^d

    void trim();

public:
    PolyC() = default;
    explicit PolyC(const Rational& a) { coeffs_ = {a}; trim(); }
    explicit PolyC(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /* The variable c itself. */
    static PolyC c();

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int d) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    PolyC operator-() const;
    friend PolyC operator+(const PolyC& a, const PolyC& b);
    friend PolyC operator-(const PolyC& a, const PolyC& b);
    friend PolyC operator*(const PolyC& a, const PolyC& b);
    PolyC operator*(const Rational& s) const;
    friend bool operator==(const PolyC& a, const PolyC& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const PolyC& a, const PolyC& b) { return !(a == b); }

    Rational eval(const Rational& c) const;

    /* All rational roots (with multiplicity collapsed), via the rational
     * root theorem on the primitive integer form. */
    std::vector<Rational> rational_roots() const;

    /* Plain rendering, e.g. "5/2·c^2 + 11·c". */
    std::string str() const;
    /* Factored rendering over Q when possible, e.g. "1/2·c^2·(5c+22)". */
    std::string factored_str() const;
};

/* Rational function in c; reduced lazily (common rational roots of numerator
 * and denominator are not cancelled automatically -- evaluation guards
 * against denominator zeros). */
struct RatFnC {
    PolyC num, den;

    Rational eval(const Rational& c) const;
};

}  // namespace voam
