#include <complex>
#include <doctest.h>

#include "voam/errors.hpp"
#include "voam/quasimodular.hpp"

using namespace voam;

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("eisenstein q-expansions") {
    QSeries e2 = eisenstein_qexp(2, 5);
    CHECK(e2.coeff(0) == Rational(-1, 12));
    CHECK(e2.coeff(1) == Rational(2));
    QSeries q = eisenstein_qexp(4, 5) * Rational(720);
    CHECK(q.coeff(0) == Rational(1));
    CHECK(q.coeff(1) == Rational(240));
    CHECK(q.coeff(2) == Rational(2160));
    CHECK(eisenstein_qexp(5, 5).is_zero());
    CHECK(eisenstein_qm(7).is_zero());
    CHECK_THROWS_AS(eisenstein_qexp(1, 5), InvalidWeight);
}

TEST_CASE("P Q R expansions and weights") {
    QSeries p = qm_to_qseries(QuasiModular::P(), 4);
    CHECK(p.coeff(0) == Rational(1));
    CHECK(p.coeff(1) == Rational(-24));
    CHECK(p.coeff(2) == Rational(-72));
    QuasiModular pqr = QuasiModular::P() * QuasiModular::Q() * QuasiModular::R();
    CHECK(pqr.weight() == 12);
    CHECK_FALSE((QuasiModular::P() + QuasiModular::Q()).is_homogeneous());
    CHECK(qm_to_qseries(QuasiModular(), 6).is_zero());
    /* Q^3 - R^2 has leading term 1728 q. */
    QuasiModular num = QuasiModular::Q() * QuasiModular::Q() * QuasiModular::Q() -
                       QuasiModular::R() * QuasiModular::R();
    QSeries s = qm_to_qseries(num, 4);
    CHECK(s.coeff(0) == Rational(0));
    CHECK(s.coeff(1) == Rational(1728));
}

TEST_CASE("modular derivative") {
    CHECK(modular_derivative(eisenstein_qm(4)) == eisenstein_qm(6) * Rational(14));
    CHECK(modular_derivative(eisenstein_qm(6)) ==
          eisenstein_qm(4) * eisenstein_qm(4) * Rational(60, 7));
    CHECK(modular_derivative(delta_qm()).is_zero());
    CHECK_THROWS_AS(modular_derivative(QuasiModular::P() + QuasiModular::Q()),
                    InhomogeneousInput);
}

TEST_CASE("delta and j") {
    CHECK(QSeries::agree(delta_poly_qexp(20), delta_product_qexp(20)));
    QSeries j = j_function(3);
    CHECK(j.offset() == Rational(-1));
    CHECK(j.coeff(0) == Rational(1));
    CHECK(j.coeff(1) == Rational(744));
    CHECK(j.coeff(2) == Rational(196884));
    CHECK(dim_Mk(12) == 2);
    CHECK(dim_Mk(2) == 0);
    CHECK(dim_Mk(0) == 1);
}

TEST_CASE("C(k,l)") {
    CHECK(coeff_C(1, 1) == eisenstein_qm(2));
    CHECK(coeff_C(2, 2) == eisenstein_qm(4) * Rational(-6));
    CHECK(coeff_C(1, 2).is_zero());
    for (int k = 1; k <= 8; ++k)
        for (int l = 1; l <= 8; ++l) CHECK(coeff_C(k, l) == coeff_C(l, k));
    CHECK_THROWS_AS(coeff_C(0, 1), RangeError);
}

TEST_CASE("weierstrass P1m") {
    LaurentZ p2 = weierstrass_P1m(1, 8);
    CHECK(p2.min_exp == -2);
    CHECK(p2.coeff_of(-2) == QuasiModular(Rational(1)));
    CHECK(p2.coeff_of(-1).is_zero());
    for (int k = 2; k <= 10; k += 2)
        CHECK(p2.coeff_of(k - 2) == eisenstein_qm(k) * Rational(k - 1));
    /* m = 0: P_1 is odd, so even z-powers vanish. */
    LaurentZ p1 = weierstrass_P1m(0, 8);
    CHECK(p1.coeff_of(-1) == QuasiModular(Rational(-1)));
    for (int e = 0; e <= 8; e += 2) CHECK(p1.coeff_of(e).is_zero());
}

TEST_CASE("square bracket coefficients") {
    for (int k = 1; k <= 5; ++k)
        for (int i = 0; i <= 6; ++i)
            CHECK(square_bracket_coeff(k, i, 0) == Rational(binomial_int(k - 1, i)));
    CHECK(square_bracket_coeff(1, 1, 1) == Rational(1));
    CHECK(square_bracket_coeff(1, 2, 1) == Rational(-1, 2));
}

TEST_CASE("numeric evaluation") {
    std::complex<double> i(0.0, 1.0);
    CHECK(qm_eval_numeric(QuasiModular(), i, 10) == std::complex<double>(0.0, 0.0));
    CHECK(std::abs(qm_eval_numeric(delta_qm(), i, 30)) > 1e-6);
    CHECK_THROWS_AS(qs_eval_numeric(eisenstein_qexp(2, 5), std::complex<double>(1.0, -1.0)),
                    NonPositiveImaginaryPart);
}
