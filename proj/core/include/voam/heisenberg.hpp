#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "voam/quasimodular.hpp"

namespace voam {

/* Partition lambda = {1^{e_1} 2^{e_2} ...} labeling the Fock vector
 * v = a[-k_1]...a[-k_n] 1; parts kept non-increasing. */
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    /* Accepts "1,1,1,2,2,5" or "1^3 2^2 5". */
    static Partition parse(const std::string& s);

    int weight() const;
    int size() const { return static_cast<int>(parts.size()); }
    /* Exponent form: part -> multiplicity. */
    std::map<int, int> exponents() const;

    std::string str() const;
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

/* Perfect matching on n labeled positions, no fixed points; pairs (i,j), i<j. */
using Pairing = std::vector<std::pair<int, int>>;

std::vector<Partition> enumerate_partitions(int n);
/* All (n-1)!! fixed-point-free involutions on {0..n-1}; empty list for odd n. */
std::vector<Pairing> enumerate_pairings(int n);

/* Q_v(tau) = sum over pairings phi of prod_{(i,j) in phi} C(k_i,k_j);
 * homogeneous of weight wt(lambda), zero when the part count is odd. */
QuasiModular qv_involution_sum(const Partition& p);
/* Same value by the 1-point Zhu recursion: peel k_1 against each other slot. */
QuasiModular qv_zhu_recursion(const Partition& p);

/* Z_{M_0}(v, tau) = Q_v(tau)/eta(tau), offset -1/24. */
QSeries z1_heisenberg(const Partition& p, int N);

/* LiZ metric value <v,v> = prod_i (-i)^{e_i} e_i!. */
Rational liz_norm(const Partition& p);

/* Genus-zero n-point function G_n^{(0)} = sum over pairings of
 * prod 1/(z_i - z_j)^2, stored structurally. */
struct PairingSumFn {
    int n = 0;
    std::vector<Pairing> pairings;
};

PairingSumFn g_n_genus0(int n);
/* Exact evaluation at pairwise distinct rational points. */
Rational eval_g_n_genus0(const PairingSumFn& f, const std::vector<Rational>& z);
/* Independent evaluation via the recursion
 * G_n = sum_{i>1} 1/(z_1-z_i)^2 G_{n-2}(z with 1 and i removed). */
Rational g_n_genus0_recursive(const std::vector<Rational>& z);

}  // namespace voam
