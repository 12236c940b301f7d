#include <doctest.h>

#include "voam/errors.hpp"
#include "voam/lattice.hpp"
#include "voam/quasimodular.hpp"

using namespace voam;

TEST_CASE("validation") {
    EvenLattice ok{{{2, -1}, {-1, 2}}};  // A2
    CHECK_NOTHROW(ok.validate());
    CHECK_THROWS_AS((EvenLattice{{{2, -1}}}).validate(), std::invalid_argument);    // not square
    CHECK_THROWS_AS((EvenLattice{{{3}}}).validate(), std::invalid_argument);        // odd diagonal
    CHECK_THROWS_AS((EvenLattice{{{2, 1}, {0, 2}}}).validate(), std::invalid_argument);  // asymmetric
    CHECK_THROWS_AS((EvenLattice{{{2, 4}, {4, 2}}}).validate(), NotPositiveDefinite);
    CHECK_THROWS_AS(shell_counts(EvenLattice{{{0}}}, 3), NotPositiveDefinite);
}

TEST_CASE("small lattices") {
    /* Rank 0: only the origin. */
    CHECK(shell_counts(EvenLattice{}, 4) ==
          std::vector<Integer>{1, 0, 0, 0, 0});
    /* <2>: x^2 = n has 2 solutions at n in {1,4,9,...}. */
    EvenLattice a1{{{2}}};
    CHECK(shell_counts(a1, 4) == std::vector<Integer>{1, 2, 0, 0, 2});
    /* A2: theta = 1 + 6q + 0q^2 + 6q^3 + 6q^4 + ... */
    EvenLattice a2{{{2, -1}, {-1, 2}}};
    CHECK(shell_counts(a2, 4) == std::vector<Integer>{1, 6, 0, 6, 6});
    /* Box-scan oracle agrees on small ranks. */
    CHECK(shell_counts_box(a1, 6) == shell_counts(a1, 6));
    CHECK(shell_counts_box(a2, 6) == shell_counts(a2, 6));
    EvenLattice d{{{2, 0}, {0, 4}}};
    CHECK(shell_counts_box(d, 6) == shell_counts(d, 6));
}

TEST_CASE("orthogonal sums multiply theta series") {
    EvenLattice a1{{{2}}};
    EvenLattice sum{{{2, 0}, {0, 2}}};
    CHECK(theta_series(sum, 8) == theta_series(a1, 8) * theta_series(a1, 8));
}

TEST_CASE("E8") {
    EvenLattice e8 = e8_lattice();
    CHECK(e8.rank() == 8);
    CHECK_NOTHROW(e8.validate());
    CHECK(shell_counts(e8, 4) == std::vector<Integer>{1, 240, 2160, 6720, 17520});
    /* theta_{E8} is the normalized weight-4 Eisenstein series 720 E4. */
    QSeries theta = theta_series(e8, 8);
    CHECK(QSeries::agree(theta, qm_to_qseries(eisenstein_qm(4) * Rational(720), 8)));
    /* The oracle's search box is far too large for rank 8. */
    CHECK_THROWS_AS(shell_counts_box(e8, 2), std::invalid_argument);
}

TEST_CASE("lattice VOA partition function") {
    EvenLattice e8 = e8_lattice();
    QSeries z = lattice_voa_partition(e8, 4);
    CHECK(z.offset() == Rational(-1, 3));
    CHECK(z.coeff(0) == Rational(1));
    CHECK(z.coeff(1) == Rational(248));  // 240 roots + 8 oscillators
    CHECK(z.coeff(2) == Rational(4124));
    CHECK(z.coeff(3) == Rational(34752));
    CHECK(z.coeff(4) == Rational(213126));
}
