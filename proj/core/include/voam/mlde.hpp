#pragma once

#include <utility>
#include <vector>

#include "voam/polyc.hpp"
#include "voam/qseries.hpp"

namespace voam {

/* Frobenius solution of the second-order character MLDE
 *   [D^2 - (5/4) c (c+4) E_4] Z = 0,   D^2 = theta^2 + 2 E_2 theta,
 * on the branch mu = -c/24, normalized a_0 = 1. */
struct MLDESolution {
    Rational c;
    Rational mu;      // leading exponent, -c/24
    QSeries coeffs;   // offset mu, a_0 = 1
};

/* Indicial roots {-c/24, (c+4)/24}. */
std::pair<Rational, Rational> indicial_roots(const Rational& c);

/* Throws ResonantIndicialRoots when (c+2)/12 is a positive integer. */
MLDESolution solve_mlde2(const Rational& c, int N);

/* [theta^2 + 2 E_2 theta - (5/4)c(c+4) E_4] applied to the solution; the
 * zero series when the recursion is consistent. */
QSeries mlde_residual(const MLDESolution& sol, int N);

/* Deligne series data: d = c(5c+22)/(10-c), h-dual = (12+6c)/(10-c). */
Rational d_of_c(const Rational& c);
Rational h_dual(const Rational& c);

/* Closed rational-function forms of the Deligne-series dimension data. */
RatFnC dim_v2_fn();
RatFnC dim_v3_fn();
RatFnC p2_fn();
RatFnC p3_fn();
RatFnC dim_x2_fn();
RatFnC dim_y3star_fn();
RatFnC griess_p2_fn();
RatFnC k3_p3_fn();

Rational dim_v2(const Rational& c);
Rational dim_v3(const Rational& c);
Rational p2(const Rational& c);
Rational p3(const Rational& c);
Rational dim_x2(const Rational& c);
Rational dim_y3star(const Rational& c);
Rational griess_p2(const Rational& c);
Rational k3_p3(const Rational& c);

/* Rational roots c of d(10-c) = c(5c+22) for each integer d in 1..d_max. */
std::vector<std::pair<Rational, long>> deligne_scan(long d_max);

/* Table verification reports. */
struct TableRow {
    Rational c;
    Rational expected;
    Rational computed;
    bool match;
};
struct TableReport {
    std::vector<TableRow> rows;
    bool all_match = true;
    bool j_cross_check = false;  // 1 + griess_p2(24) equals q^1 coeff of j-744
};
TableReport verify_k2_table();
TableReport verify_k3_table();

}  // namespace voam
