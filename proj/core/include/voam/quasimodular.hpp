#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voam/qseries.hpp"

namespace voam {

/* Exponent triple (i,j,k) for the monomial P^i Q^j R^k. */
using PQRMono = std::array<int, 3>;

inline int mono_weight(const PQRMono& m) { return 2 * m[0] + 4 * m[1] + 6 * m[2]; }

/* Element of the graded ring of quasimodular forms
 *   \frak{Q} = C[P,Q,R],   wt P = 2, wt Q = 4, wt R = 6,
 * stored as a sparse polynomial with exact rational coefficients.  Zero is
 * the empty term map.  P is quasimodular; Q, R are modular. */
class QuasiModular {
    std::map<PQRMono, Rational> terms_;

public:
    QuasiModular() = default;
    explicit QuasiModular(const Rational& c) {
        if (!c.is_zero()) terms_[{0, 0, 0}] = c;
    }

    static QuasiModular P() { return monomial({1, 0, 0}, Rational(1)); }
    static QuasiModular Q() { return monomial({0, 1, 0}, Rational(1)); }
    static QuasiModular R() { return monomial({0, 0, 1}, Rational(1)); }
    static QuasiModular monomial(const PQRMono& m, const Rational& c);

    const std::map<PQRMono, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /* Weight of a homogeneous value; nullopt when inhomogeneous (zero is
     * homogeneous of every weight and reports weight 0 here). */
    std::optional<int> weight() const;
    bool is_homogeneous() const { return weight().has_value(); }

    QuasiModular operator-() const;
    friend QuasiModular operator+(const QuasiModular& a, const QuasiModular& b);
    friend QuasiModular operator-(const QuasiModular& a, const QuasiModular& b);
    friend QuasiModular operator*(const QuasiModular& a, const QuasiModular& b);
    QuasiModular operator*(const Rational& s) const;
    friend bool operator==(const QuasiModular& a, const QuasiModular& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const QuasiModular& a, const QuasiModular& b) {
        return !(a == b);
    }

    /* Ramanujan's theta-action extended as a derivation:
     *   theta P = (P^2-Q)/12,  theta Q = (PQ-R)/3,  theta R = (PR-Q^2)/2. */
    QuasiModular theta() const;

    std::string str_pqr() const;
    /* Renders via the E-basis: P^iQ^jR^k = (-12)^i 720^j (-30240)^k E2^i E4^j E6^k,
     * e.g. "-90·E2·E4·E6". */
    std::string str_e() const;
};

/* Bernoulli number B_k from z/(e^z-1) = sum B_k z^k / k!. */
Rational bernoulli(int k);

/* q-expansion E_k = -B_k/k! + (2/(k-1)!) sum sigma_{k-1}(n) q^n to order N.
 * Odd k >= 3 yields the zero series (lattice-sum convention); k < 2 is an
 * InvalidWeight error. */
QSeries eisenstein_qexp(int k, int N);

/* E_k as an element of \frak{Q}: E2 = -P/12, even k >= 4 resolved exactly in
 * the monomial basis {Q^aR^b}, odd k zero. */
QuasiModular eisenstein_qm(int k);

/* q-expansion of a quasimodular value to order N. */
QSeries qm_to_qseries(const QuasiModular& f, int N);

/* Modular derivative D f = theta f + k E2 f on homogeneous f of weight k;
 * raises weight by 2.  Throws InhomogeneousInput. */
QuasiModular modular_derivative(const QuasiModular& f);

/* Delta = (Q^3-R^2)/1728 as a polynomial and, as series, also via the
 * product q prod (1-q^n)^24 (the two must agree). */
QuasiModular delta_qm();
QSeries delta_poly_qexp(int N);
QSeries delta_product_qexp(int N);

/* j = Q^3/Delta, offset -1. */
QSeries j_function(int N);

/* dim M_k for even weight k (0 for odd/negative). */
int dim_Mk(int k);

/* C(k,l) = (-1)^{l+1} (k+l-1)!/((k-1)!(l-1)!) E_{k+l}; zero when k+l odd. */
QuasiModular coeff_C(int k, int l);

/* Laurent expansion in z with quasimodular coefficients:
 *   P_1^{(m)}(z,tau) = m! [ (-1)^{m+1} z^{-m-1}
 *                           + sum_{k>m} binom(k-1,m) E_k z^{k-m-1} ],
 * truncated at z^{z_order}. */
struct LaurentZ {
    int min_exp;                         // lowest retained z-exponent
    std::vector<QuasiModular> coeffs;    // coeffs[t] multiplies z^{min_exp+t}
    const QuasiModular& coeff_of(int e) const;
};
LaurentZ weierstrass_P1m(int m, int z_order);

/* Square-bracket change-of-variable coefficient c(k,i,m): the coefficient of
 * x^m in binom(k-1+x, i). */
Rational square_bracket_coeff(int k, int i, int m);

/* Evaluates the order-N q-expansion at q = e^{2 pi i tau}; Im tau > 0. */
std::complex<double> qs_eval_numeric(const QSeries& f, std::complex<double> tau);
std::complex<double> qm_eval_numeric(const QuasiModular& f, std::complex<double> tau, int N);

}  // namespace voam
