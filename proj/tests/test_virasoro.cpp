#include <doctest.h>

#include <numeric>

#include "voam/errors.hpp"
#include "voam/virasoro.hpp"

using namespace voam;

namespace {
PolyC pc(std::initializer_list<Rational> cs) { return PolyC(std::vector<Rational>(cs)); }
}  // namespace

TEST_CASE("PolyC arithmetic and rendering") {
    PolyC c = PolyC::c();
    PolyC f = c * c * Rational(5, 2) + c * Rational(11);  // 5/2 c^2 + 11 c
    CHECK(f.degree() == 2);
    CHECK(f.coeff(2) == Rational(5, 2));
    CHECK(f.eval(Rational(2)) == Rational(32));
    CHECK(f.str() == "5/2·c^2 + 11·c");
    /* (c-1)(2c+3) has rational roots 1 and -3/2. */
    PolyC g = pc({Rational(-3), Rational(1), Rational(2)});
    std::vector<Rational> roots = g.rational_roots();
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == Rational(-3, 2));
    CHECK(roots[1] == Rational(1));
    CHECK(PolyC().is_zero());
    CHECK(PolyC().degree() == -1);
}

TEST_CASE("RatFnC guards poles") {
    RatFnC r{PolyC::c(), pc({Rational(-10), Rational(1)})};  // c/(c-10)
    CHECK(r.eval(Rational(5)) == Rational(-1));
    CHECK_THROWS_AS(r.eval(Rational(10)), PoleAtC);
}

TEST_CASE("vacuum expectation values") {
    CHECK(vacuum_expectation({2, -2}) == pc({Rational(0), Rational(1, 2)}));
    CHECK(vacuum_expectation({4, -4}) == pc({Rational(0), Rational(5)}));
    /* <L_2 L_2 L_{-2} L_{-2}> = c(4 + c/2). */
    CHECK(vacuum_expectation({2, 2, -2, -2}) == pc({Rational(0), Rational(4), Rational(1, 2)}));
    CHECK(vacuum_expectation({4, -2, -2}) == pc({Rational(0), Rational(3)}));
    CHECK(vacuum_expectation({1, -1}).is_zero());
    CHECK(vacuum_expectation({3, -2}).is_zero());
}

TEST_CASE("both normal-ordering strategies agree") {
    for (int n = 2; n <= 6; n += 2) {
        for (const auto& a : vir_basis(n)) {
            for (const auto& b : vir_basis(n)) {
                VirasoroWord w;
                for (int x : a) w.push_back(x);
                for (int x : b) w.push_back(-x);
                CHECK(vacuum_expectation(w) == vacuum_expectation_naive(w));
            }
        }
    }
}

TEST_CASE("level bases and Gram matrices") {
    CHECK(vir_basis(1).empty());
    CHECK(vir_basis(2) == std::vector<std::vector<int>>{{2}});
    CHECK(vir_basis(4) == std::vector<std::vector<int>>{{2, 2}, {4}});
    auto m4 = gram_matrix(4);
    REQUIRE(m4.size() == 2);
    CHECK(m4[0][0] == pc({Rational(0), Rational(4), Rational(1, 2)}));
    CHECK(m4[0][1] == pc({Rational(0), Rational(3)}));
    CHECK(m4[1][0] == m4[0][1]);
    CHECK(m4[1][1] == pc({Rational(0), Rational(5)}));
}

TEST_CASE("Kac determinants") {
    CHECK(kac_det(2) == pc({Rational(0), Rational(1, 2)}));
    PolyC d4 = kac_det(4);
    CHECK(d4 == pc({Rational(0), Rational(0), Rational(11), Rational(5, 2)}));
    CHECK(d4.factored_str() == "1/2·c^2·(5c+22)");
    PolyC d6 = kac_det(6);
    /* 3/4 c^4 (7c+68)(5c+22)^2 (2c-1): check a few evaluations and roots. */
    CHECK(d6.eval(Rational(0)) == Rational(0));
    CHECK(d6.eval(Rational(-68, 7)) == Rational(0));
    CHECK(d6.eval(Rational(-22, 5)) == Rational(0));
    CHECK(d6.eval(Rational(1, 2)) == Rational(0));
    CHECK(d6.eval(Rational(1)) ==
          Rational(3, 4) * Rational(75) * Rational(27 * 27) * Rational(1));
    std::vector<Rational> roots = d6.rational_roots();
    REQUIRE(roots.size() == 4);
    /* Every nonzero root is a minimal-model central charge c_{p,q} with
     * (p-1)(q-1) <= 6. */
    CHECK(roots[0] == c_pq(2, 7));
    for (const Rational& r : roots) {
        if (r.is_zero()) continue;
        bool found = false;
        for (int p = 2; p <= 7; ++p)
            for (int q = p + 1; q <= 8; ++q) {
                if (std::gcd(p, q) != 1 || (p - 1) * (q - 1) > 6) continue;
                if (c_pq(p, q) == r) found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("discrete series data") {
    CHECK(c_pq(2, 5) == Rational(-22, 5));
    CHECK(discrete_series_weights(2, 5) == std::vector<Rational>{Rational(-1, 5), Rational(0)});
    CHECK(c_pq(3, 4) == Rational(1, 2));
    CHECK(discrete_series_weights(3, 4) ==
          std::vector<Rational>{Rational(0), Rational(1, 16), Rational(1, 2)});
    CHECK(discrete_series_weights(4, 5).size() == 6);
    CHECK(h_rs(3, 4, 1, 1) == Rational(0));
    CHECK_THROWS_AS(c_pq(2, 4), NotCoprime);
    CHECK_THROWS_AS(c_pq(1, 3), RangeError);
    CHECK_THROWS_AS(h_rs(3, 4, 4, 1), RangeError);
}

TEST_CASE("vacuum module graded dimension") {
    QSeries g = vir_graded_dim(10);
    /* Partitions into parts >= 2: 1, 0, 1, 1, 2, 2, 4, ... */
    CHECK(g.coeff(0) == Rational(1));
    CHECK(g.coeff(1) == Rational(0));
    CHECK(g.coeff(2) == Rational(1));
    CHECK(g.coeff(3) == Rational(1));
    CHECK(g.coeff(4) == Rational(2));
    CHECK(g.coeff(5) == Rational(2));
    CHECK(g.coeff(6) == Rational(4));
    /* Coefficient of q^n counts vir_basis(n). */
    for (int n = 0; n <= 8; ++n)
        CHECK(g.coeff(n) == Rational(static_cast<long>(n == 0 ? 1 : vir_basis(n).size())));
}
