#pragma once

#include <utility>
#include <vector>

#include "voam/polyc.hpp"
#include "voam/qseries.hpp"

namespace voam {

/* A word in the Virasoro modes: entry n denotes L_n.  Applied to the vacuum,
 * subject to [L_m,L_n] = (m-n)L_{m+n} + (m^3-m)/12 delta_{m,-n} c and
 * L_n 1 = 0 for n >= -1. */
using VirasoroWord = std::vector<int>;

/* <1, L_{n_1}...L_{n_k} 1> as an exact polynomial in c, by recursive
 * commutation to canonical form with memoization. */
PolyC vacuum_expectation(const VirasoroWord& word);

/* Same value by a second, independent strategy: full normal ordering of the
 * whole word by adjacent transpositions (no per-prefix canonicalization). */
PolyC vacuum_expectation_naive(const VirasoroWord& word);

/* Basis of the degree-n piece of the vacuum Verma module: partitions of n
 * into parts >= 2 as descending words L_{-n_1}...L_{-n_k}, ordered
 * lexicographically ([2,2] before [4]). */
std::vector<std::vector<int>> vir_basis(int n);

/* Gram matrix of vir_basis(n) for the LiZ form with L_n^dagger = L_{-n}. */
std::vector<std::vector<PolyC>> gram_matrix(int n);
PolyC kac_det(int n);

/* Discrete series data: c_{p,q} = 1 - 6(p-q)^2/pq and
 * h_{r,s} = ((pr-qs)^2-(p-q)^2)/4pq.  p,q >= 2 coprime. */
Rational c_pq(int p, int q);
Rational h_rs(int p, int q, int r, int s);
/* The (p-1)(q-1)/2 inequivalent conformal weights. */
std::vector<Rational> discrete_series_weights(int p, int q);

/* Coefficient part of the Vir_c graded dimension: prod_{n>=2}(1-q^n)^{-1}
 * (the q^{-c/24} prefactor is applied per-c at render time). */
QSeries vir_graded_dim(int N);

}  // namespace voam
