#include "voam/mlde.hpp"

#include "voam/errors.hpp"
#include "voam/quasimodular.hpp"

namespace voam {

std::pair<Rational, Rational> indicial_roots(const Rational& c) {
    return {-c / Rational(24), (c + Rational(4)) / Rational(24)};
}

MLDESolution solve_mlde2(const Rational& c, int N) {
    Rational gap = (c + Rational(2)) / Rational(12);
    if (gap.is_integer() && gap > Rational(0))
        throw ResonantIndicialRoots("solve_mlde2: indicial roots differ by the positive integer " +
                                    gap.str());
    Rational mu = -c / Rational(24);
    Rational cc = Rational(5, 4) * c * (c + Rational(4));
    QSeries E2 = eisenstein_qexp(2, N), E4 = eisenstein_qexp(4, N);
    std::vector<Rational> a(static_cast<size_t>(N) + 1, Rational(0));
    a[0] = Rational(1);
    for (int n = 1; n <= N; ++n) {
        Rational x = mu + Rational(n);
        /* Coefficient of a_n after splitting off the j = 0 terms of E_2, E_4:
         * (mu+n)^2 - (mu+n)/6 - c(c+4)/576. */
        Rational lead = x * x - x / Rational(6) - c * (c + Rational(4)) / Rational(576);
        if (lead.is_zero())
            throw InvalidC("solve_mlde2: degenerate recursion at order " + std::to_string(n));
        Rational rhs(0);
        for (int j = 1; j <= n; ++j) {
            Rational term = Rational(2) * E2.coeff(j) * (mu + Rational(n - j)) - cc * E4.coeff(j);
            rhs -= term * a[static_cast<size_t>(n - j)];
        }
        a[static_cast<size_t>(n)] = rhs / lead;
    }
    return {c, mu, QSeries(mu, std::move(a))};
}

QSeries mlde_residual(const MLDESolution& sol, int N) {
    QSeries Z = sol.coeffs.truncated(std::min(N, sol.coeffs.trunc_order()));
    QSeries E2 = eisenstein_qexp(2, Z.trunc_order());
    QSeries E4 = eisenstein_qexp(4, Z.trunc_order());
    Rational cc = Rational(5, 4) * sol.c * (sol.c + Rational(4));
    return Z.theta().theta() + E2 * Z.theta() * Rational(2) - E4 * Z * cc;
}

namespace {

PolyC pc(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long x : coeffs) v.emplace_back(x);
    return PolyC(std::move(v));
}

const PolyC kC = PolyC::c();

}  // namespace

Rational d_of_c(const Rational& c) {
    return RatFnC{kC * pc({22, 5}), pc({10, -1})}.eval(c);
}

Rational h_dual(const Rational& c) {
    return RatFnC{pc({12, 6}), pc({10, -1})}.eval(c);
}

RatFnC dim_v2_fn() {
    return {kC * pc({804, 508, 175, 25}), pc({22, -1}) * pc({10, -1}) * PolyC(Rational(2))};
}

RatFnC dim_v3_fn() {
    return {kC * pc({33344, 148872, 68308, 10330, 975, 125}),
            pc({34, -1}) * pc({22, -1}) * pc({10, -1}) * PolyC(Rational(6))};
}

RatFnC p2_fn() {
    return {pc({22, 5}) * pc({2, 1}) * pc({2, 1}) * pc({-1, 1}) * PolyC(Rational(5)),
            pc({22, -1}) * pc({10, -1}) * PolyC(Rational(2))};
}

RatFnC p3_fn() {
    return {kC * pc({22, 5}) * pc({-1, 1}) * pc({5, 1}) * pc({268, 0, 5}) * PolyC(Rational(5)),
            pc({34, -1}) * pc({22, -1}) * pc({10, -1}) * PolyC(Rational(6))};
}

RatFnC dim_x2_fn() {
    return {kC * pc({22, 5}) * pc({6, 1}) * pc({-1, 1}) * PolyC(Rational(5)),
            pc({10, -1}) * pc({10, -1}) * PolyC(Rational(2))};
}

RatFnC dim_y3star_fn() {
    return {kC * pc({22, 5}) * pc({2, 1}) * pc({2, 1}) * pc({-8, 1}) * pc({-2, 5}) * pc({-1, 1}) *
                PolyC(Rational(5)),
            pc({10, -1}) * pc({10, -1}) * pc({22, -1}) * pc({34, -1}) * PolyC(Rational(6))};
}

RatFnC griess_p2_fn() {
    return {pc({22, 5}) * pc({-1, 2}) * pc({68, 7}), pc({748, -55, 1}) * PolyC(Rational(2))};
}

RatFnC k3_p3_fn() {
    return {pc({22, 5}) * pc({-1, 2}) * pc({68, 7}) * pc({3, 5}) * pc({46, 3}),
            pc({-3984, 517172, -32992, 703, -5})};
}

Rational dim_v2(const Rational& c) { return dim_v2_fn().eval(c); }
Rational dim_v3(const Rational& c) { return dim_v3_fn().eval(c); }
Rational p2(const Rational& c) { return p2_fn().eval(c); }
Rational p3(const Rational& c) { return p3_fn().eval(c); }
Rational dim_x2(const Rational& c) { return dim_x2_fn().eval(c); }
Rational dim_y3star(const Rational& c) { return dim_y3star_fn().eval(c); }
Rational griess_p2(const Rational& c) { return griess_p2_fn().eval(c); }
Rational k3_p3(const Rational& c) { return k3_p3_fn().eval(c); }

std::vector<std::pair<Rational, long>> deligne_scan(long d_max) {
    std::vector<std::pair<Rational, long>> out;
    for (long d = 1; d <= d_max; ++d) {
        /* 5c^2 + (22+d)c - 10d = 0. */
        PolyC quad(std::vector<Rational>{Rational(-10 * d), Rational(22 + d), Rational(5)});
        for (const Rational& root : quad.rational_roots()) out.emplace_back(root, d);
    }
    return out;
}

namespace {

TableReport run_table(const std::vector<std::pair<Rational, Rational>>& expect,
                      Rational (*fn)(const Rational&)) {
    TableReport rep;
    for (const auto& [c, want] : expect) {
        Rational got = fn(c);
        bool ok = got == want;
        rep.rows.push_back({c, want, got, ok});
        rep.all_match = rep.all_match && ok;
    }
    return rep;
}

}  // namespace

TableReport verify_k2_table() {
    TableReport rep = run_table(
        {
            {Rational(-44, 5), Rational(1)},
            {Rational(8), Rational(155)},
            {Rational(16), Rational(2295)},
            {Rational(47, 2), Rational(96255)},
            {Rational(24), Rational(196883)},
            {Rational(32), Rational(139503)},
            {Rational(164, 5), Rational(90117)},
            {Rational(236, 7), Rational(63365)},
            {Rational(40), Rational(20619)},
        },
        &griess_p2);
    /* The Moonshine cross-check: 1 + dim P_2(24) is the q-coefficient of
     * j - 744. */
    QSeries j = j_function(3);
    rep.j_cross_check = Rational(1) + griess_p2(Rational(24)) == j.coeff_at(Rational(1));
    rep.all_match = rep.all_match && rep.j_cross_check;
    return rep;
}

TableReport verify_k3_table() {
    TableReport rep = run_table(
        {
            {Rational(-114, 7), Rational(1)},
            {Rational(4, 5), Rational(1)},
            {Rational(48), Rational(42987519)},
        },
        &k3_p3);
    rep.j_cross_check = true;  // not applicable for K=3
    return rep;
}

}  // namespace voam
