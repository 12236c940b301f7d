#pragma once

#include <vector>

#include "voam/errors.hpp"
#include "voam/rational.hpp"

namespace voam {

/* Truncated power series in $q$ with exact rational coefficients and a
 * rational exponent offset $\mu$:
 *
 *   $q^\mu \sum_{n=0}^{N} a_n q^n + O(q^{\mu+N+1})$
 *
 * The offset houses prefactors such as $q^{-c/24}$.  Binary operations
 * propagate the truncation order pessimistically (min of the operands'
 * effective reach).  Values are immutable after construction. */
class QSeries {
    Rational offset_;
    std::vector<Rational> coeffs_;  // coeffs_[n] multiplies q^{offset_+n}

public:
    QSeries(Rational offset, std::vector<Rational> coeffs);

    /* The zero series, carried to truncation order N with offset 0. */
    static QSeries zero(int N);
    /* The constant series 1 + O(q^{N+1}). */
    static QSeries one(int N);

    const Rational& offset() const { return offset_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /* Coefficient of q^{offset+n}; n beyond the truncation order is an error. */
    const Rational& coeff(int n) const;
    /* Coefficient of q^e for arbitrary rational e (zero if e is not of the
     * form offset+n with 0 <= n <= N; error past the truncation horizon). */
    Rational coeff_at(const Rational& e) const;

    bool is_zero() const;

    /* Multiplies by the monomial q^d. */
    QSeries shifted(const Rational& d) const;
    /* Re-truncates to order N <= trunc_order(). */
    QSeries truncated(int N) const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator*(const Rational& s) const;

    /* Multiplicative inverse to the truncation order; requires a_0 != 0. */
    QSeries inverse() const;
    /* Integer power; negative powers go through inverse(). */
    QSeries pow(long e) const;
    /* theta = q d/dq: a_n -> (mu+n) a_n. */
    QSeries theta() const;

    /* Equality compares offset and all retained coefficients (the shorter
     * truncation must still match where both are defined). */
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    /* True when both series agree on every coefficient of q^e they both
     * retain, allowing different offsets/truncations. */
    static bool agree(const QSeries& a, const QSeries& b);

    std::string str() const;
};

/* eta(tau) = q^{1/24} prod_{n>=1} (1-q^n). */
QSeries eta(int N);
/* 1/eta: offset -1/24, coefficients the partition numbers p(n). */
QSeries eta_inverse(int N);
/* Unrestricted partition count p(n). */
Integer partition_count(int n);

}  // namespace voam
