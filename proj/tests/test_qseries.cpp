#include <doctest.h>

#include "voam/errors.hpp"
#include "voam/qseries.hpp"

using namespace voam;

namespace {
QSeries qs(std::initializer_list<long> cs, long num = 0, long den = 1) {
    std::vector<Rational> v;
    for (long x : cs) v.emplace_back(x);
    return QSeries(Rational(num, den), std::move(v));
}
}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) < Rational(0));
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK(Rational(3, 7).str() == "3/7");
    CHECK(Rational(4).str() == "4");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("addition aligns offsets") {
    CHECK(qs({1, 1}) + qs({0, 1}) == qs({1, 2}));
    QSeries f = qs({3, -2, 5});
    CHECK(f + QSeries::zero(2) == f);
    /* Equal fractional offsets add componentwise. */
    QSeries a = qs({1, 1}, -1, 24), b = qs({0, 1}, -1, 24);
    CHECK(a + b == qs({1, 2}, -1, 24));
    /* Offsets differing by a non-integer are rejected. */
    CHECK_THROWS_AS(qs({1}, 1, 3) + qs({1}), IncompatibleOffset);
}

TEST_CASE("multiplication") {
    QSeries geom = qs({1, 1, 1, 1, 1});
    CHECK(qs({1, -1, 0, 0, 0}) * geom == QSeries::one(4));
    CHECK(eta(15) * eta_inverse(15) == QSeries::one(15));
    CHECK((qs({1}, 1, 24) * qs({1}, -1, 24)).offset() == Rational(0));
}

TEST_CASE("inverse") {
    QSeries inv = qs({1, -1, 0, 0, 0}).inverse();
    for (int n = 0; n <= 4; ++n) CHECK(inv.coeff(n) == Rational(1));
    CHECK(inv.inverse() == qs({1, -1, 0, 0, 0}));
    /* A vanishing head is normalized away: the inverse of the Delta series
     * (offset 0, leading q) has leading exponent -1. */
    QSeries dlike = qs({0, 1, -24});
    CHECK(dlike.inverse().offset() == Rational(-1));
    CHECK_THROWS_AS(QSeries::zero(4).inverse(), ZeroLeadingTerm);
}

TEST_CASE("theta operator") {
    CHECK(QSeries::one(5).theta() == QSeries::zero(5));
    CHECK(qs({0, 0, 0, 1}).theta() == qs({0, 0, 0, 3}));
    /* theta(eta^{-1}) in the q^{-1/24} frame starts with -1/24. */
    CHECK(eta_inverse(10).theta().coeff(0) == Rational(-1, 24));
}

TEST_CASE("eta and partition numbers") {
    CHECK(eta(10).offset() == Rational(1, 24));
    CHECK(eta_inverse(10).offset() == Rational(-1, 24));
    long p[5] = {1, 1, 2, 3, 5};
    for (int n = 0; n <= 4; ++n) {
        CHECK(partition_count(n) == p[n]);
        CHECK(eta_inverse(10).coeff(n) == Rational(p[n]));
    }
    QSeries d = eta(10).pow(24);
    CHECK(d.offset() == Rational(1));
    CHECK(d.coeff(0) == Rational(1));
    CHECK(d.coeff(1) == Rational(-24));
}

TEST_CASE("coefficient access guards") {
    QSeries f = qs({1, 2}, -1, 3);
    CHECK(f.coeff_at(Rational(-1, 3)) == Rational(1));
    CHECK(f.coeff_at(Rational(0)) == Rational(0));  // not of the form offset + n
    CHECK_THROWS_AS(f.coeff(5), std::out_of_range);
    CHECK_THROWS_AS(f.coeff_at(Rational(26, 3)), std::out_of_range);  // offset + 9
}

TEST_CASE("agree compares across offsets") {
    QSeries a = qs({0, 1, 2});
    QSeries b = qs({1, 2}, 1);
    CHECK(QSeries::agree(a, b));
    CHECK_FALSE(QSeries::agree(a, qs({1, 3}, 1)));
}
