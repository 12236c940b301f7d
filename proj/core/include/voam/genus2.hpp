#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "voam/heisenberg.hpp"
#include "voam/quasimodular.hpp"

namespace voam {

/* Paired exponent triples: P1^{i1}Q1^{j1}R1^{k1} · P2^{i2}Q2^{j2}R2^{k2}. */
using PQRMono2 = std::pair<PQRMono, PQRMono>;

/* Element of \frak{Q} (x) \frak{Q}: quasimodular in tau_1 and tau_2. */
class TwoVarQuasiModular {
    std::map<PQRMono2, Rational> terms_;

public:
    TwoVarQuasiModular() = default;
    explicit TwoVarQuasiModular(const Rational& c) {
        if (!c.is_zero()) terms_[{{0, 0, 0}, {0, 0, 0}}] = c;
    }

    /* Embeds a one-variable value on side 1 or 2. */
    static TwoVarQuasiModular embed(const QuasiModular& f, int side);

    const std::map<PQRMono2, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /* (tau_1-weight, tau_2-weight) when bihomogeneous. */
    std::optional<std::pair<int, int>> biweight() const;

    TwoVarQuasiModular operator-() const;
    friend TwoVarQuasiModular operator+(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b);
    friend TwoVarQuasiModular operator-(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b);
    friend TwoVarQuasiModular operator*(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b);
    TwoVarQuasiModular operator*(const Rational& s) const;
    friend bool operator==(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b) {
        return !(a == b);
    }

    /* E-basis rendering with primed second-torus factors, e.g. "1/2·E2·E2'". */
    std::string str_e() const;

    std::complex<double> eval_numeric(std::complex<double> tau1, std::complex<double> tau2,
                                      int N) const;
};

/* Truncated polynomial in the sewing parameter epsilon with exact
 * TwoVarQuasiModular coefficients. */
class EpsSeries {
    std::vector<TwoVarQuasiModular> coeffs_;  // index = epsilon power, 0..N

public:
    EpsSeries() : coeffs_(1) {}
    explicit EpsSeries(int N) : coeffs_(static_cast<size_t>(N) + 1) {}

    static EpsSeries one(int N);

    int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const TwoVarQuasiModular& coeff(int n) const;
    void set_coeff(int n, TwoVarQuasiModular v);
    bool is_zero() const;

    EpsSeries operator-() const;
    friend EpsSeries operator+(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator-(const EpsSeries& a, const EpsSeries& b);
    friend EpsSeries operator*(const EpsSeries& a, const EpsSeries& b);
    EpsSeries operator*(const Rational& s) const;
    friend bool operator==(const EpsSeries& a, const EpsSeries& b);
    friend bool operator!=(const EpsSeries& a, const EpsSeries& b) { return !(a == b); }

    /* Multiplies by epsilon^k (dropping overflowed top coefficients). */
    EpsSeries shifted(int k) const;

    /* exp of a series with vanishing constant term. */
    static EpsSeries exp(const EpsSeries& x);

    std::complex<double> eval_numeric(std::complex<double> tau1, std::complex<double> tau2,
                                      std::complex<double> eps, int N) const;
};

/* The similarity-rescaled sewing moment matrix
 *   M_a(k,l) = eps^{(k+l)/2} C(k,l,tau_a)/l,   1 <= k,l <= K,
 * conjugate to A_a(k,l) = eps^{(k+l)/2} C(k,l,tau_a)/sqrt(kl) by diag(sqrt k);
 * all traces of products and (1,1) resolvent entries agree with A_a. */
struct RescaledAMatrix {
    int side = 1;  // which torus: 1 or 2
    int K = 0;     // cutoff
    int N = 0;     // epsilon truncation
    std::vector<std::vector<EpsSeries>> entries;

    const EpsSeries& at(int k, int l) const {
        return entries[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)];
    }
};

/* divisor_on_k selects the alternative (equally valid) rescaling C(k,l)/k,
 * exposed for the rescaling-independence check. */
RescaledAMatrix build_a_matrix(int side, int K, int N, bool divisor_on_k = false);

/* log det(I - A_1 A_2) = -sum_{n>=1} Tr((A_1 A_2)^n)/n, truncated at eps^N.
 * Throws CutoffTooSmall when K < N. */
EpsSeries logdet_series(int K, int N, bool divisor_on_k = false);
/* det(I - A_1 A_2) and det^{-1/2}, as epsilon-series. */
EpsSeries det_series(int K, int N);
EpsSeries det_inv_sqrt(int K, int N);

/* 2 pi i Omega_11 = 2 pi i tau_1 + [om11], symmetrically for Omega_22;
 * 2 pi i Omega_12 = [om12].  The tau-linear atoms are implicit in the
 * definition of om11/om22 (pure epsilon-correction series). */
struct PeriodMatrix {
    EpsSeries om11, om22, om12;
};
PeriodMatrix period_matrix(int K, int N);

/* Genus-two partition function of the rank-r Heisenberg VOA: the prefactor
 * eta(tau_1)^{-r} eta(tau_2)^{-r} is recorded as a descriptor; the series
 * part is det(I - A_1 A_2)^{-r/2}. */
struct Z2Heisenberg {
    std::string prefactor;
    int rank = 1;
    EpsSeries series;
};
Z2Heisenberg z2_heisenberg(int rank, int K, int N);

/* Chequered-diagram oracle: the eps^n coefficient of the rank-1 series part,
 * summed directly over partitions lambda of n:
 *   sum_lambda Q_{v(lambda)}(tau_1) Q_{v(lambda)}(tau_2) / <v,v>. */
TwoVarQuasiModular chequered_oracle(int n);

/* Element of G = (SL(2,Z) x SL(2,Z)) semidirect Z_2 acting on
 * (tau_1,tau_2,eps); represented as gamma_1 gamma_2 beta^m. */
struct GElement {
    std::array<long, 4> g1{1, 0, 0, 1};  // a,b,c,d acting on tau_1
    std::array<long, 4> g2{1, 0, 0, 1};  // acting on tau_2
    bool swap = false;                   // the beta involution

    static GElement identity() { return {}; }
    static GElement T1() { return {{1, 1, 0, 1}, {1, 0, 0, 1}, false}; }
    static GElement T2() { return {{1, 0, 0, 1}, {1, 1, 0, 1}, false}; }
    static GElement beta() { return {{1, 0, 0, 1}, {1, 0, 0, 1}, true}; }
};

/* |Z^{(2)}_{M_0^2}|_{-1}gamma - chi^{(2)}(gamma) Z^{(2)}_{M_0^2}| at a point
 * of the sewing domain, in double precision; chi is derived numerically from
 * the eta-function transformation, det(C Omega + D) from period_matrix. */
double numeric_equivariance_check(const GElement& gamma, std::complex<double> tau1,
                                  std::complex<double> tau2, std::complex<double> eps, int N);

}  // namespace voam
