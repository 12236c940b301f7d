#include "voam/genus2.hpp"

#include <cmath>
#include <sstream>

#include "voam/errors.hpp"

namespace voam {

TwoVarQuasiModular TwoVarQuasiModular::embed(const QuasiModular& f, int side) {
    if (side != 1 && side != 2) throw std::invalid_argument("embed: side must be 1 or 2");
    TwoVarQuasiModular out;
    for (const auto& [m, c] : f.terms()) {
        PQRMono2 key = side == 1 ? PQRMono2{m, {0, 0, 0}} : PQRMono2{{0, 0, 0}, m};
        out.terms_[key] = c;
    }
    return out;
}

std::optional<std::pair<int, int>> TwoVarQuasiModular::biweight() const {
    if (terms_.empty()) return std::make_pair(0, 0);
    auto w = std::make_pair(mono_weight(terms_.begin()->first.first),
                            mono_weight(terms_.begin()->first.second));
    for (const auto& [m, c] : terms_)
        if (std::make_pair(mono_weight(m.first), mono_weight(m.second)) != w)
            return std::nullopt;
    return w;
}

TwoVarQuasiModular TwoVarQuasiModular::operator-() const {
    TwoVarQuasiModular f;
    for (const auto& [m, c] : terms_) f.terms_[m] = -c;
    return f;
}

TwoVarQuasiModular operator+(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b) {
    TwoVarQuasiModular f = a;
    for (const auto& [m, c] : b.terms_) {
        auto it = f.terms_.find(m);
        if (it == f.terms_.end()) {
            f.terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) f.terms_.erase(it);
        }
    }
    return f;
}

TwoVarQuasiModular operator-(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b) {
    return a + (-b);
}

TwoVarQuasiModular operator*(const TwoVarQuasiModular& a, const TwoVarQuasiModular& b) {
    TwoVarQuasiModular f;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            PQRMono2 m{{ma.first[0] + mb.first[0], ma.first[1] + mb.first[1],
                        ma.first[2] + mb.first[2]},
                       {ma.second[0] + mb.second[0], ma.second[1] + mb.second[1],
                        ma.second[2] + mb.second[2]}};
            auto it = f.terms_.find(m);
            if (it == f.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) f.terms_[m] = c;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) f.terms_.erase(it);
            }
        }
    return f;
}

TwoVarQuasiModular TwoVarQuasiModular::operator*(const Rational& s) const {
    TwoVarQuasiModular f;
    if (s.is_zero()) return f;
    for (const auto& [m, c] : terms_) f.terms_[m] = c * s;
    return f;
}

std::string TwoVarQuasiModular::str_e() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, craw] : terms_) {
        Rational c = craw;
        const PQRMono sides[2] = {m.first, m.second};
        static const Rational conv[3] = {Rational(-12), Rational(720), Rational(-30240)};
        for (int s = 0; s < 2; ++s)
            for (int g = 0; g < 3; ++g)
                for (int t = 0; t < sides[s][static_cast<size_t>(g)]; ++t) c *= conv[g];
        bool neg = c < Rational(0);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? -c : c;
        int total = 0;
        for (int s = 0; s < 2; ++s)
            for (int g = 0; g < 3; ++g) total += sides[s][static_cast<size_t>(g)];
        bool printed = false;
        if (total == 0 || a != Rational(1)) {
            os << a.str();
            printed = true;
        }
        const char* names[3] = {"E2", "E4", "E6"};
        for (int s = 0; s < 2; ++s)
            for (int g = 0; g < 3; ++g) {
                int e = sides[s][static_cast<size_t>(g)];
                if (e == 0) continue;
                if (printed) os << "·";
                os << names[g] << (s == 1 ? "'" : "");
                if (e > 1) os << "^" << e;
                printed = true;
            }
    }
    return os.str();
}

namespace {

struct GenVals {
    std::complex<double> v[2][3];  // [side][P,Q,R]
};

GenVals generator_values(std::complex<double> tau1, std::complex<double> tau2, int N) {
    GenVals g;
    QSeries e2 = eisenstein_qexp(2, N), e4 = eisenstein_qexp(4, N), e6 = eisenstein_qexp(6, N);
    std::complex<double> taus[2] = {tau1, tau2};
    for (int s = 0; s < 2; ++s) {
        g.v[s][0] = -12.0 * qs_eval_numeric(e2, taus[s]);
        g.v[s][1] = 720.0 * qs_eval_numeric(e4, taus[s]);
        g.v[s][2] = -30240.0 * qs_eval_numeric(e6, taus[s]);
    }
    return g;
}

std::complex<double> eval_terms(const TwoVarQuasiModular& f, const GenVals& g) {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [m, c] : f.terms()) {
        std::complex<double> t(c.to_double(), 0.0);
        const PQRMono sides[2] = {m.first, m.second};
        for (int s = 0; s < 2; ++s)
            for (int gi = 0; gi < 3; ++gi)
                for (int e = 0; e < sides[s][static_cast<size_t>(gi)]; ++e)
                    t *= g.v[s][gi];
        acc += t;
    }
    return acc;
}

}  // namespace

std::complex<double> TwoVarQuasiModular::eval_numeric(std::complex<double> tau1,
                                                      std::complex<double> tau2, int N) const {
    return eval_terms(*this, generator_values(tau1, tau2, N));
}

EpsSeries EpsSeries::one(int N) {
    EpsSeries s(N);
    s.coeffs_[0] = TwoVarQuasiModular(Rational(1));
    return s;
}

const TwoVarQuasiModular& EpsSeries::coeff(int n) const {
    if (n < 0 || n > trunc_order())
        throw std::out_of_range("EpsSeries::coeff: index past truncation order");
    return coeffs_[static_cast<size_t>(n)];
}

void EpsSeries::set_coeff(int n, TwoVarQuasiModular v) {
    if (n < 0 || n > trunc_order())
        throw std::out_of_range("EpsSeries::set_coeff: index past truncation order");
    coeffs_[static_cast<size_t>(n)] = std::move(v);
}

bool EpsSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

EpsSeries EpsSeries::operator-() const {
    EpsSeries s(trunc_order());
    for (size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = -coeffs_[i];
    return s;
}

EpsSeries operator+(const EpsSeries& a, const EpsSeries& b) {
    int N = std::min(a.trunc_order(), b.trunc_order());
    EpsSeries s(N);
    for (int n = 0; n <= N; ++n)
        s.coeffs_[static_cast<size_t>(n)] =
            a.coeffs_[static_cast<size_t>(n)] + b.coeffs_[static_cast<size_t>(n)];
    return s;
}

EpsSeries operator-(const EpsSeries& a, const EpsSeries& b) { return a + (-b); }

EpsSeries operator*(const EpsSeries& a, const EpsSeries& b) {
    int N = std::min(a.trunc_order(), b.trunc_order());
    EpsSeries s(N);
    for (int i = 0; i <= N; ++i) {
        if (a.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j) {
            if (b.coeffs_[static_cast<size_t>(j)].is_zero()) continue;
            s.coeffs_[static_cast<size_t>(i + j)] =
                s.coeffs_[static_cast<size_t>(i + j)] +
                a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
        }
    }
    return s;
}

EpsSeries EpsSeries::operator*(const Rational& s) const {
    EpsSeries out(trunc_order());
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * s;
    return out;
}

bool operator==(const EpsSeries& a, const EpsSeries& b) {
    int N = std::min(a.trunc_order(), b.trunc_order());
    for (int n = 0; n <= N; ++n)
        if (a.coeffs_[static_cast<size_t>(n)] != b.coeffs_[static_cast<size_t>(n)]) return false;
    return true;
}

EpsSeries EpsSeries::shifted(int k) const {
    EpsSeries s(trunc_order());
    for (int n = 0; n + k <= trunc_order(); ++n) {
        if (n + k < 0) continue;
        s.coeffs_[static_cast<size_t>(n + k)] = coeffs_[static_cast<size_t>(n)];
    }
    return s;
}

EpsSeries EpsSeries::exp(const EpsSeries& x) {
    if (!x.coeff(0).is_zero())
        throw std::invalid_argument("EpsSeries::exp: nonzero constant term");
    int N = x.trunc_order();
    EpsSeries acc = EpsSeries::one(N);
    EpsSeries term = EpsSeries::one(N);
    for (int k = 1; k <= N; ++k) {
        term = term * x * Rational(1, k);
        acc = acc + term;
    }
    return acc;
}

std::complex<double> EpsSeries::eval_numeric(std::complex<double> tau1, std::complex<double> tau2,
                                             std::complex<double> eps, int N) const {
    GenVals g = generator_values(tau1, tau2, N);
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> ep(1.0, 0.0);
    for (int n = 0; n <= trunc_order(); ++n) {
        acc += eval_terms(coeffs_[static_cast<size_t>(n)], g) * ep;
        ep *= eps;
    }
    return acc;
}

RescaledAMatrix build_a_matrix(int side, int K, int N, bool divisor_on_k) {
    if (K < 1) throw std::invalid_argument("build_a_matrix: K < 1");
    RescaledAMatrix M;
    M.side = side;
    M.K = K;
    M.N = N;
    M.entries.assign(static_cast<size_t>(K), std::vector<EpsSeries>(static_cast<size_t>(K), EpsSeries(N)));
    for (int k = 1; k <= K; ++k)
        for (int l = 1; l <= K; ++l) {
            if ((k + l) % 2 != 0) continue;
            int pow = (k + l) / 2;
            if (pow > N) continue;
            QuasiModular c = coeff_C(k, l) * Rational(1, divisor_on_k ? k : l);
            if (c.is_zero()) continue;
            M.entries[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)].set_coeff(
                pow, TwoVarQuasiModular::embed(c, side));
        }
    return M;
}

namespace {

using EMatrix = std::vector<std::vector<EpsSeries>>;

EMatrix matmul(const EMatrix& A, const EMatrix& B, int N) {
    size_t K = A.size();
    EMatrix C(K, std::vector<EpsSeries>(K, EpsSeries(N)));
    for (size_t i = 0; i < K; ++i)
        for (size_t t = 0; t < K; ++t) {
            if (A[i][t].is_zero()) continue;
            for (size_t j = 0; j < K; ++j) {
                if (B[t][j].is_zero()) continue;
                C[i][j] = C[i][j] + A[i][t] * B[t][j];
            }
        }
    return C;
}

EpsSeries trace(const EMatrix& A, int N) {
    EpsSeries t(N);
    for (size_t i = 0; i < A.size(); ++i) t = t + A[i][i];
    return t;
}

}  // namespace

EpsSeries logdet_series(int K, int N, bool divisor_on_k) {
    if (K < N) throw CutoffTooSmall("logdet_series: cutoff K < N");
    RescaledAMatrix M1 = build_a_matrix(1, K, N, divisor_on_k);
    RescaledAMatrix M2 = build_a_matrix(2, K, N, divisor_on_k);
    EMatrix B = matmul(M1.entries, M2.entries, N);
    EpsSeries out(N);
    EMatrix P = B;
    /* Each factor of B carries at least eps^1, so n > N contributes nothing. */
    for (int n = 1; n <= N; ++n) {
        out = out - trace(P, N) * Rational(1, n);
        if (n < N) P = matmul(P, B, N);
    }
    return out;
}

EpsSeries det_series(int K, int N) { return EpsSeries::exp(logdet_series(K, N)); }

EpsSeries det_inv_sqrt(int K, int N) {
    return EpsSeries::exp(logdet_series(K, N) * Rational(-1, 2));
}

PeriodMatrix period_matrix(int K, int N) {
    if (K < N) throw CutoffTooSmall("period_matrix: cutoff K < N");
    RescaledAMatrix M1 = build_a_matrix(1, K, N);
    RescaledAMatrix M2 = build_a_matrix(2, K, N);
    EMatrix B12 = matmul(M1.entries, M2.entries, N);
    EMatrix B21 = matmul(M2.entries, M1.entries, N);
    /* Resolvents (I-B)^{-1} = sum B^n. */
    auto resolvent = [&](const EMatrix& B) {
        size_t K_ = B.size();
        EMatrix R(K_, std::vector<EpsSeries>(K_, EpsSeries(N)));
        for (size_t i = 0; i < K_; ++i) R[i][i] = EpsSeries::one(N);
        EMatrix P = B;
        for (int n = 1; n <= N; ++n) {
            for (size_t i = 0; i < K_; ++i)
                for (size_t j = 0; j < K_; ++j) R[i][j] = R[i][j] + P[i][j];
            if (n < N) P = matmul(P, B, N);
        }
        return R;
    };
    EMatrix R12 = resolvent(B12);
    EMatrix R21 = resolvent(B21);
    EMatrix A2R = matmul(M2.entries, R12, N);
    EMatrix A1R = matmul(M1.entries, R21, N);
    PeriodMatrix pm{EpsSeries(N), EpsSeries(N), EpsSeries(N)};
    pm.om11 = A2R[0][0].shifted(1);
    pm.om22 = A1R[0][0].shifted(1);
    pm.om12 = -R12[0][0].shifted(1);
    return pm;
}

Z2Heisenberg z2_heisenberg(int rank, int K, int N) {
    if (rank < 1) throw std::invalid_argument("z2_heisenberg: rank < 1");
    Z2Heisenberg z;
    z.rank = rank;
    std::ostringstream os;
    os << "eta(tau1)^-" << rank << "·eta(tau2)^-" << rank;
    z.prefactor = os.str();
    z.series = EpsSeries::exp(logdet_series(K, N) * Rational(-rank, 2));
    return z;
}

TwoVarQuasiModular chequered_oracle(int n) {
    if (n < 0) throw std::invalid_argument("chequered_oracle: n < 0");
    TwoVarQuasiModular out;
    for (const Partition& p : enumerate_partitions(n)) {
        QuasiModular qv = qv_involution_sum(p);
        if (qv.is_zero()) continue;
        TwoVarQuasiModular prod =
            TwoVarQuasiModular::embed(qv, 1) * TwoVarQuasiModular::embed(qv, 2);
        out = out + prod * (Rational(1) / liz_norm(p));
    }
    return out;
}

namespace {

constexpr double kPi = 3.14159265358979323846;

std::complex<double> eta_eval(std::complex<double> tau, int N) {
    return qs_eval_numeric(eta(N), tau);
}

std::complex<double> mobius(const std::array<long, 4>& g, std::complex<double> tau) {
    return (static_cast<double>(g[0]) * tau + static_cast<double>(g[1])) /
           (static_cast<double>(g[2]) * tau + static_cast<double>(g[3]));
}

/* Minimal nonzero distance of the lattice with basis (2 pi i, 2 pi i tau). */
double lattice_min_distance(std::complex<double> tau) {
    double best = 1e300;
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            if (m == 0 && n == 0) continue;
            double d = 2.0 * kPi * std::abs(static_cast<double>(m) + static_cast<double>(n) * tau);
            best = std::min(best, d);
        }
    return best;
}

using Mat4 = std::array<std::array<long, 4>, 4>;

Mat4 mat4_id() {
    Mat4 I{};
    for (int i = 0; i < 4; ++i) I[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return I;
}

Mat4 mat4_mul(const Mat4& A, const Mat4& B) {
    Mat4 C{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int t = 0; t < 4; ++t)
                C[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                    A[static_cast<size_t>(i)][static_cast<size_t>(t)] *
                    B[static_cast<size_t>(t)][static_cast<size_t>(j)];
    return C;
}

/* Sp(4,Z) image of gamma = gamma_1 gamma_2 beta^m. */
Mat4 sp4_of(const GElement& g) {
    Mat4 G1 = mat4_id();
    G1[0][0] = g.g1[0]; G1[0][2] = g.g1[1];
    G1[2][0] = g.g1[2]; G1[2][2] = g.g1[3];
    Mat4 G2 = mat4_id();
    G2[1][1] = g.g2[0]; G2[1][3] = g.g2[1];
    G2[3][1] = g.g2[2]; G2[3][3] = g.g2[3];
    Mat4 M = mat4_mul(G1, G2);
    if (g.swap) {
        Mat4 B{};
        B[0][1] = B[1][0] = B[2][3] = B[3][2] = 1;
        M = mat4_mul(M, B);
    }
    return M;
}

}  // namespace

double numeric_equivariance_check(const GElement& gamma, std::complex<double> tau1,
                                  std::complex<double> tau2, std::complex<double> eps, int N) {
    if (tau1.imag() <= 0.0 || tau2.imag() <= 0.0)
        throw OutsideDomain("numeric_equivariance_check: tau not in upper half-plane");
    if (std::abs(eps) >= 0.25 * lattice_min_distance(tau1) * lattice_min_distance(tau2))
        throw OutsideDomain("numeric_equivariance_check: |eps| outside the sewing domain");
    const int Nq = 40;
    const std::complex<double> two_pi_i(0.0, 2.0 * kPi);

    /* Transformed point: apply beta first, then the two torus actions. */
    std::complex<double> t1 = tau1, t2 = tau2, ep = eps;
    if (gamma.swap) std::swap(t1, t2);
    std::complex<double> j1 = static_cast<double>(gamma.g1[2]) * t1 + static_cast<double>(gamma.g1[3]);
    std::complex<double> j2 = static_cast<double>(gamma.g2[2]) * t2 + static_cast<double>(gamma.g2[3]);
    std::complex<double> gt1 = mobius(gamma.g1, t1);
    std::complex<double> gt2 = mobius(gamma.g2, t2);
    std::complex<double> gep = ep / (j1 * j2);

    /* Z^{(2)} for the rank-two Heisenberg: eta^{-2} eta^{-2} det^{-1}. */
    EpsSeries det_inv = EpsSeries::exp(logdet_series(N, N) * Rational(-1));
    auto z2 = [&](std::complex<double> a, std::complex<double> b, std::complex<double> e) {
        std::complex<double> pref = std::pow(eta_eval(a, Nq) * eta_eval(b, Nq), -2.0);
        return pref * det_inv.eval_numeric(a, b, e, Nq);
    };

    /* chi on each SL(2,Z) factor, derived from the genus-one transformation
     * of Z_{M_0^2} = eta^{-2} (weight -1):  chi = Z(g tau)(c tau+d)/Z(tau). */
    auto chi1 = [&](const std::array<long, 4>& g, std::complex<double> tau) {
        std::complex<double> Z = std::pow(eta_eval(tau, Nq), -2.0);
        std::complex<double> Zg = std::pow(eta_eval(mobius(g, tau), Nq), -2.0);
        std::complex<double> j = static_cast<double>(g[2]) * tau + static_cast<double>(g[3]);
        return Zg * j / Z;
    };
    std::complex<double> chi2 = chi1(gamma.g1, t1) * chi1(gamma.g2, t2);
    if (gamma.swap) chi2 = -chi2;

    /* det(C Omega + D) at the source point, Omega from the sewing map. */
    PeriodMatrix pm = period_matrix(N, N);
    std::complex<double> om11 = tau1 + pm.om11.eval_numeric(tau1, tau2, eps, Nq) / two_pi_i;
    std::complex<double> om22 = tau2 + pm.om22.eval_numeric(tau1, tau2, eps, Nq) / two_pi_i;
    std::complex<double> om12 = pm.om12.eval_numeric(tau1, tau2, eps, Nq) / two_pi_i;
    Mat4 M = sp4_of(gamma);
    std::complex<double> Om[2][2] = {{om11, om12}, {om12, om22}};
    std::complex<double> CD[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            CD[i][j] = static_cast<double>(M[static_cast<size_t>(i + 2)][static_cast<size_t>(j + 2)]);
            for (int t = 0; t < 2; ++t)
                CD[i][j] += static_cast<double>(M[static_cast<size_t>(i + 2)][static_cast<size_t>(t)]) *
                            Om[t][j];
        }
    std::complex<double> detCD = CD[0][0] * CD[1][1] - CD[0][1] * CD[1][0];

    /* weight -1 slash: (Z|gamma)(x) = Z(gamma x) det(C Omega + D). */
    std::complex<double> lhs = z2(gt1, gt2, gep) * detCD;
    std::complex<double> rhs = chi2 * z2(tau1, tau2, eps);
    return std::abs(lhs - rhs);
}

}  // namespace voam
