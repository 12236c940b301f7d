#include <doctest.h>

#include "voam/errors.hpp"
#include "voam/heisenberg.hpp"

using namespace voam;

TEST_CASE("partition parsing") {
    Partition a = Partition::parse("1,1,1,2,2,5");
    Partition b = Partition::parse("1^3 2^2 5");
    CHECK(a == b);
    CHECK(a.weight() == 12);
    CHECK(a.size() == 6);
    CHECK(a.exponents() == std::map<int, int>{{1, 3}, {2, 2}, {5, 1}});
    CHECK_THROWS_AS(Partition::parse("0 1"), std::invalid_argument);
    CHECK_THROWS_AS(Partition({-2}), std::invalid_argument);
}

TEST_CASE("pairing counts") {
    CHECK(enumerate_pairings(2).size() == 1);
    CHECK(enumerate_pairings(4).size() == 3);
    CHECK(enumerate_pairings(6).size() == 15);
    CHECK(enumerate_pairings(3).empty());
    CHECK(enumerate_pairings(5).empty());
}

TEST_CASE("one-point functions Qv") {
    CHECK(qv_involution_sum(Partition()) == QuasiModular(Rational(1)));
    CHECK(qv_involution_sum(Partition({1, 1})) == eisenstein_qm(2));
    CHECK(qv_involution_sum(Partition({2, 1})).is_zero());
    QuasiModular e2 = eisenstein_qm(2);
    CHECK(qv_involution_sum(Partition({1, 1, 1, 1})) == e2 * e2 * Rational(3));
    Partition big = Partition::parse("1^3 2^2 5");
    QuasiModular qv = qv_involution_sum(big);
    CHECK(qv == eisenstein_qm(2) * eisenstein_qm(4) * eisenstein_qm(6) * Rational(-90));
    CHECK(qv.str_e() == "-90·E2·E4·E6");
    CHECK(qv.weight() == 12);
}

TEST_CASE("Zhu recursion agrees with the involution sum") {
    for (const int n : {2, 4, 6, 8}) {
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(qv_zhu_recursion(p) == qv_involution_sum(p));
        }
    }
    /* Odd part-count, or a part that can only pair into odd total weight,
     * forces zero. */
    CHECK(qv_involution_sum(Partition({3, 2, 2})).is_zero());
    CHECK(qv_involution_sum(Partition({3, 2, 2, 2})).is_zero());
}

TEST_CASE("graded trace z1") {
    /* v = vacuum reduces to the character 1/eta. */
    CHECK(z1_heisenberg(Partition(), 12) == eta_inverse(12));
    /* v = a[-1]a[-1]1 gives E2/eta. */
    QSeries lhs = z1_heisenberg(Partition({1, 1}), 12);
    QSeries rhs = qm_to_qseries(eisenstein_qm(2), 12) * eta_inverse(12);
    CHECK(QSeries::agree(lhs, rhs));
}

TEST_CASE("LiZ norms") {
    CHECK(liz_norm(Partition()) == Rational(1));
    CHECK(liz_norm(Partition({1})) == Rational(-1));
    CHECK(liz_norm(Partition({2, 2})) == Rational(8));
    CHECK(liz_norm(Partition::parse("1^3 2^2 5")) == Rational(240));
}

TEST_CASE("genus-zero n-point functions") {
    PairingSumFn g2 = g_n_genus0(2);
    CHECK(eval_g_n_genus0(g2, {Rational(2), Rational(0)}) == Rational(1, 4));
    PairingSumFn g4 = g_n_genus0(4);
    CHECK(g4.pairings.size() == 3);
    std::vector<Rational> z = {Rational(0), Rational(1), Rational(3), Rational(7)};
    CHECK(eval_g_n_genus0(g4, z) == g_n_genus0_recursive(z));
    CHECK_THROWS_AS(eval_g_n_genus0(g2, {Rational(1), Rational(1)}), CoincidentPoints);
    CHECK_THROWS_AS(eval_g_n_genus0(g4, {Rational(1)}), std::invalid_argument);
}
