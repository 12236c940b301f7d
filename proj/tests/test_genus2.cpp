#include <doctest.h>

#include <complex>

#include "voam/errors.hpp"
#include "voam/genus2.hpp"

using namespace voam;

namespace {
TwoVarQuasiModular e(int k, int side) {
    return TwoVarQuasiModular::embed(eisenstein_qm(k), side);
}
}  // namespace

TEST_CASE("two-variable ring basics") {
    TwoVarQuasiModular f = e(2, 1) * e(4, 2);
    CHECK(f.biweight() == std::pair<int, int>{2, 4});
    CHECK(e(4, 1).biweight() == std::pair<int, int>{4, 0});
    CHECK((e(2, 1) * e(2, 2)* Rational(1, 2)).str_e() == "1/2·E2·E2'");
    CHECK_FALSE((e(2, 1) + e(4, 1)).biweight().has_value());
    CHECK_THROWS_AS(TwoVarQuasiModular::embed(eisenstein_qm(2), 3), std::invalid_argument);
}

TEST_CASE("epsilon series guards") {
    EpsSeries s(4);
    s.set_coeff(1, e(2, 1));
    CHECK(s.coeff(1) == e(2, 1));
    CHECK(s.coeff(0).is_zero());
    CHECK_THROWS_AS(s.coeff(5), std::out_of_range);
    CHECK(EpsSeries::exp(s).coeff(2) == e(2, 1) * e(2, 1) * Rational(1, 2));
    EpsSeries bad(3);
    bad.set_coeff(0, TwoVarQuasiModular(Rational(1)));
    CHECK_THROWS_AS(EpsSeries::exp(bad), std::invalid_argument);
}

TEST_CASE("moment matrix entries") {
    RescaledAMatrix a1 = build_a_matrix(1, 2, 2);
    CHECK(a1.at(1, 1).coeff(1) == e(2, 1));
    CHECK(a1.at(2, 2).coeff(2) == e(4, 1) * Rational(-3));
    CHECK(a1.at(1, 2).is_zero());
    RescaledAMatrix a2 = build_a_matrix(2, 2, 2);
    CHECK(a2.at(1, 1).coeff(1) == e(2, 2));
    CHECK_THROWS_AS(build_a_matrix(1, 0, 2), std::invalid_argument);
}

TEST_CASE("sewing determinant") {
    EpsSeries det = det_series(6, 6);
    CHECK(det.coeff(0) == TwoVarQuasiModular(Rational(1)));
    CHECK(det.coeff(1).is_zero());
    CHECK(det.coeff(2) == -(e(2, 1) * e(2, 2)));
    CHECK(det.coeff(3).is_zero());
    CHECK(det.coeff(4) == e(4, 1) * e(4, 2) * Rational(-15));
    CHECK(det.coeff(6) ==
          e(6, 1) * e(6, 2) * Rational(-210) + e(2, 1) * e(4, 1) * e(2, 2) * e(4, 2) * Rational(9));
    EpsSeries dis = det_inv_sqrt(6, 6);
    CHECK(dis.coeff(2) == e(2, 1) * e(2, 2) * Rational(1, 2));
    CHECK(dis.coeff(4) == e(2, 1) * e(2, 1) * e(2, 2) * e(2, 2) * Rational(3, 8) +
                              e(4, 1) * e(4, 2) * Rational(15, 2));
    CHECK_THROWS_AS(logdet_series(3, 5), CutoffTooSmall);
}

TEST_CASE("period matrix") {
    PeriodMatrix om = period_matrix(6, 5);
    CHECK(om.om11.coeff(2) == e(2, 2));
    CHECK(om.om11.coeff(4) == e(2, 1) * e(2, 2) * e(2, 2));
    CHECK(om.om22.coeff(2) == e(2, 1));
    CHECK(om.om22.coeff(4) == e(2, 2) * e(2, 1) * e(2, 1));
    CHECK(om.om12.coeff(1) == TwoVarQuasiModular(Rational(-1)));
    CHECK(om.om12.coeff(2).is_zero());
    CHECK(om.om12.coeff(3) == -(e(2, 1) * e(2, 2)));
    /* Stable under raising the cutoff. */
    PeriodMatrix om2 = period_matrix(9, 5);
    CHECK(om.om11 == om2.om11);
    CHECK(om.om12 == om2.om12);
}

TEST_CASE("genus-two Heisenberg partition function") {
    Z2Heisenberg z1 = z2_heisenberg(1, 8, 8);
    CHECK(z1.series == det_inv_sqrt(8, 8));
    /* Rank 2 is the square of rank 1. */
    Z2Heisenberg z2 = z2_heisenberg(2, 6, 6);
    CHECK(z2.series == det_inv_sqrt(6, 6) * det_inv_sqrt(6, 6));
    CHECK_THROWS_AS(z2_heisenberg(0, 4, 4), std::invalid_argument);
}

TEST_CASE("chequered diagram oracle") {
    CHECK(chequered_oracle(0) == TwoVarQuasiModular(Rational(1)));
    CHECK(chequered_oracle(1).is_zero());
    EpsSeries dis = det_inv_sqrt(6, 6);
    for (int n = 0; n <= 6; ++n) CHECK(chequered_oracle(n) == dis.coeff(n));
    CHECK_THROWS_AS(chequered_oracle(-1), std::invalid_argument);
}

TEST_CASE("numeric equivariance") {
    std::complex<double> t1(0.0, 2.0), t2(0.0, 3.0), eps(0.05, 0.0);
    CHECK(numeric_equivariance_check(GElement::identity(), t1, t2, eps, 8) < 1e-12);
    /* beta swaps the tori: exact at a symmetric point. */
    CHECK(numeric_equivariance_check(GElement::beta(), t1, t1, eps, 8) < 1e-12);
    CHECK(numeric_equivariance_check(GElement::T1(), t1, t2, eps, 8) < 1e-6);
    CHECK_THROWS_AS(
        numeric_equivariance_check(GElement::identity(), std::complex<double>(0.0, -1.0), t2, eps, 8),
        OutsideDomain);
    CHECK_THROWS_AS(
        numeric_equivariance_check(GElement::identity(), t1, t2, std::complex<double>(15.0, 0.0), 8),
        OutsideDomain);
}
