#include <doctest.h>

#include "voam/errors.hpp"
#include "voam/mlde.hpp"

using namespace voam;

TEST_CASE("indicial roots and resonance") {
    auto [r0, r1] = indicial_roots(Rational(8));
    CHECK(r0 == Rational(-1, 3));
    CHECK(r1 == Rational(1, 2));
    /* (c+2)/12 a positive integer makes the roots resonant. */
    CHECK_THROWS_AS(solve_mlde2(Rational(10), 6), ResonantIndicialRoots);
    CHECK_THROWS_AS(solve_mlde2(Rational(22), 6), ResonantIndicialRoots);
}

TEST_CASE("deligne series solution at c = 8") {
    MLDESolution sol = solve_mlde2(Rational(8), 12);
    CHECK(sol.mu == Rational(-1, 3));
    CHECK(sol.coeffs.offset() == Rational(-1, 3));
    CHECK(sol.coeffs.coeff(0) == Rational(1));
    CHECK(sol.coeffs.coeff(1) == Rational(248));
    CHECK(sol.coeffs.coeff(2) == Rational(4124));
    CHECK(sol.coeffs.coeff(3) == Rational(34752));
    CHECK(mlde_residual(sol, 12).is_zero());
}

TEST_CASE("dimension formulas along the deligne series") {
    const Rational cs[8] = {Rational(1),     Rational(2), Rational(14, 5), Rational(4),
                            Rational(26, 5), Rational(6), Rational(7),     Rational(8)};
    const long ds[8] = {3, 8, 14, 28, 52, 78, 133, 248};
    for (int i = 0; i < 8; ++i) {
        CHECK(d_of_c(cs[i]) == Rational(ds[i]));
        MLDESolution sol = solve_mlde2(cs[i], 8);
        CHECK(sol.coeffs.coeff(1) == Rational(ds[i]));
        CHECK(sol.coeffs.coeff(2) == dim_v2(cs[i]));
        CHECK(sol.coeffs.coeff(3) == dim_v3(cs[i]));
        CHECK(mlde_residual(sol, 8).is_zero());
    }
    CHECK(h_dual(Rational(8)) == Rational(30));
    CHECK(p2(Rational(8)) == Rational(3875));
    CHECK(p2(Rational(1)) == Rational(0));
    CHECK(dim_v2(Rational(8)) == Rational(4124));
    CHECK_THROWS_AS(d_of_c(Rational(10)), PoleAtC);
}

TEST_CASE("deligne scan inverts d(c)") {
    auto hits = deligne_scan(250);
    bool saw8 = false, saw248 = false;
    for (const auto& [c, d] : hits) {
        CHECK(d_of_c(c) == Rational(d));
        if (c == Rational(2) && d == 8) saw8 = true;
        if (c == Rational(8) && d == 248) saw248 = true;
    }
    CHECK(saw8);
    CHECK(saw248);
}

TEST_CASE("griess and k3 coefficient formulas") {
    CHECK(griess_p2(Rational(24)) == Rational(196883));
    CHECK(k3_p3(Rational(48)) == Rational(42987519));
    CHECK(k3_p3(Rational(4, 5)) == Rational(1));
    CHECK_THROWS_AS(dim_v2(Rational(22)), PoleAtC);
}

TEST_CASE("published tables verify") {
    TableReport k2 = verify_k2_table();
    CHECK(k2.all_match);
    CHECK(k2.j_cross_check);
    CHECK_FALSE(k2.rows.empty());
    for (const TableRow& r : k2.rows) CHECK(r.expected == r.computed);
    TableReport k3 = verify_k3_table();
    CHECK(k3.all_match);
    for (const TableRow& r : k3.rows) CHECK(r.expected == r.computed);
}
