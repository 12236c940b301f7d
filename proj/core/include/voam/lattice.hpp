#pragma once

#include <vector>

#include "voam/qseries.hpp"

namespace voam {

/* Even positive-definite lattice given by an integer Gram matrix. */
struct EvenLattice {
    std::vector<std::vector<long>> gram;

    int rank() const { return static_cast<int>(gram.size()); }
    /* Validates symmetry, even diagonal and positive definiteness. */
    void validate() const;
};

/* Standard E8 root lattice Gram matrix (Cartan matrix of E8). */
EvenLattice e8_lattice();

/* |L_n| = #{alpha in L : Q(alpha) = (alpha,alpha)/2 = n} for n = 0..N, by
 * certified rational Cholesky bound propagation. */
std::vector<Integer> shell_counts(const EvenLattice& L, int N);

/* Independent oracle: brute-force box scan with the certified bound
 * x_i^2 <= 2n (G^{-1})_{ii}. */
std::vector<Integer> shell_counts_box(const EvenLattice& L, int N);

/* theta_L = sum |L_n| q^n, offset 0. */
QSeries theta_series(const EvenLattice& L, int N);

/* Z_{V_L} = theta_L / eta^d, offset -d/24. */
QSeries lattice_voa_partition(const EvenLattice& L, int N);

}  // namespace voam
