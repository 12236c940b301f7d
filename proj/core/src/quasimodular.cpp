#include "voam/quasimodular.hpp"

#include <mutex>
#include <sstream>

#include "voam/errors.hpp"
#include "voam/linalg.hpp"

namespace voam {

QuasiModular QuasiModular::monomial(const PQRMono& m, const Rational& c) {
    QuasiModular f;
    if (!c.is_zero()) f.terms_[m] = c;
    return f;
}

std::optional<int> QuasiModular::weight() const {
    if (terms_.empty()) return 0;
    int w = mono_weight(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (mono_weight(m) != w) return std::nullopt;
    return w;
}

QuasiModular QuasiModular::operator-() const {
    QuasiModular f;
    for (const auto& [m, c] : terms_) f.terms_[m] = -c;
    return f;
}

QuasiModular operator+(const QuasiModular& a, const QuasiModular& b) {
    QuasiModular f = a;
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

QuasiModular operator-(const QuasiModular& a, const QuasiModular& b) { return a + (-b); }

QuasiModular operator*(const QuasiModular& a, const QuasiModular& b) {
    QuasiModular f;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            PQRMono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
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

QuasiModular QuasiModular::operator*(const Rational& s) const {
    QuasiModular f;
    if (s.is_zero()) return f;
    for (const auto& [m, c] : terms_) f.terms_[m] = c * s;
    return f;
}

QuasiModular QuasiModular::theta() const {
    /* Derivation determined by Ramanujan's identities on P, Q, R. */
    static const QuasiModular tP =
        (QuasiModular::P() * QuasiModular::P() - QuasiModular::Q()) * Rational(1, 12);
    static const QuasiModular tQ =
        (QuasiModular::P() * QuasiModular::Q() - QuasiModular::R()) * Rational(1, 3);
    static const QuasiModular tR =
        (QuasiModular::P() * QuasiModular::R() - QuasiModular::Q() * QuasiModular::Q()) *
        Rational(1, 2);
    QuasiModular out;
    for (const auto& [m, c] : terms_) {
        const QuasiModular gens[3] = {tP, tQ, tR};
        for (int g = 0; g < 3; ++g) {
            if (m[g] == 0) continue;
            PQRMono rest = m;
            rest[g] -= 1;
            out = out + gens[g] * QuasiModular::monomial(rest, c * Rational(m[g]));
        }
    }
    return out;
}

namespace {

std::string render_terms(const std::map<PQRMono, Rational>& terms, bool ebasis) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, craw] : terms) {
        Rational c = craw;
        if (ebasis) {
            /* P^iQ^jR^k = (-12)^i 720^j (-30240)^k E2^i E4^j E6^k. */
            for (int t = 0; t < m[0]; ++t) c *= Rational(-12);
            for (int t = 0; t < m[1]; ++t) c *= Rational(720);
            for (int t = 0; t < m[2]; ++t) c *= Rational(-30240);
        }
        bool neg = c < Rational(0);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? -c : c;
        const char* names_pqr[3] = {"P", "Q", "R"};
        const char* names_e[3] = {"E2", "E4", "E6"};
        bool factors = m[0] + m[1] + m[2] > 0;
        bool printed = false;
        if (!factors || a != Rational(1)) {
            os << a.str();
            printed = true;
        }
        for (int g = 0; g < 3; ++g) {
            if (m[g] == 0) continue;
            if (printed) os << "·";
            os << (ebasis ? names_e[g] : names_pqr[g]);
            if (m[g] > 1) os << "^" << m[g];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace

std::string QuasiModular::str_pqr() const { return render_terms(terms_, false); }
std::string QuasiModular::str_e() const { return render_terms(terms_, true); }

Rational bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::vector<Rational> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (k < static_cast<int>(cache.size())) return cache[static_cast<size_t>(k)];
    /* Invert (e^z-1)/z = sum z^n/(n+1)! and read off B_k = k! [z^k]. */
    int N = k + 4;
    std::vector<Rational> f(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        f[static_cast<size_t>(n)] = Rational(Integer(1), factorial(static_cast<unsigned>(n + 1)));
    QSeries inv = QSeries(Rational(0), f).inverse();
    cache.resize(static_cast<size_t>(N) + 1);
    for (int n = 0; n <= N; ++n)
        cache[static_cast<size_t>(n)] = inv.coeff(n) * Rational(factorial(static_cast<unsigned>(n)));
    return cache[static_cast<size_t>(k)];
}

namespace {

Integer sigma(int power, int n) {
    Integer s = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        Integer t = 1;
        for (int e = 0; e < power; ++e) t *= d;
        s += t;
    }
    return s;
}

}  // namespace

QSeries eisenstein_qexp(int k, int N) {
    if (k < 2) throw InvalidWeight("eisenstein_qexp: weight < 2");
    if (k % 2 == 1) return QSeries::zero(N);
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    c[0] = -bernoulli(k) / Rational(factorial(static_cast<unsigned>(k)));
    Rational pref = Rational(2) / Rational(factorial(static_cast<unsigned>(k - 1)));
    for (int n = 1; n <= N; ++n)
        c[static_cast<size_t>(n)] = pref * Rational(sigma(k - 1, n));
    return QSeries(Rational(0), std::move(c));
}

QSeries qm_to_qseries(const QuasiModular& f, int N) {
    QSeries P = eisenstein_qexp(2, N) * Rational(-12);
    QSeries Q = eisenstein_qexp(4, N) * Rational(720);
    QSeries R = eisenstein_qexp(6, N) * Rational(-30240);
    QSeries out = QSeries::zero(N);
    for (const auto& [m, c] : f.terms()) {
        QSeries t = QSeries::one(N) * c;
        for (int i = 0; i < m[0]; ++i) t = t * P;
        for (int j = 0; j < m[1]; ++j) t = t * Q;
        for (int k = 0; k < m[2]; ++k) t = t * R;
        out = out + t;
    }
    return out;
}

QuasiModular eisenstein_qm(int k) {
    if (k < 2) throw InvalidWeight("eisenstein_qm: weight < 2");
    if (k % 2 == 1) return QuasiModular();
    if (k == 2) return QuasiModular::P() * Rational(-1, 12);
    /* Resolve E_k in the modular monomial basis {Q^aR^b : 4a+6b = k}.  A form
     * of weight k vanishing to order dim M_k vanishes, so matching the first
     * dim M_k q-coefficients determines the coordinates uniquely. */
    std::vector<PQRMono> basis;
    for (int a = 0; 4 * a <= k; ++a)
        if ((k - 4 * a) % 6 == 0) basis.push_back({0, a, (k - 4 * a) / 6});
    int t = static_cast<int>(basis.size());
    QSeries target = eisenstein_qexp(k, t - 1 >= 0 ? t - 1 : 0);
    RatMatrix A(static_cast<size_t>(t), RatVector(static_cast<size_t>(t)));
    RatVector b(static_cast<size_t>(t));
    for (int col = 0; col < t; ++col) {
        QSeries s = qm_to_qseries(QuasiModular::monomial(basis[static_cast<size_t>(col)], Rational(1)), t - 1);
        for (int row = 0; row < t; ++row) A[static_cast<size_t>(row)][static_cast<size_t>(col)] = s.coeff(row);
    }
    for (int row = 0; row < t; ++row) b[static_cast<size_t>(row)] = target.coeff(row);
    RatVector x = solve_linear(A, b);
    QuasiModular out;
    for (int col = 0; col < t; ++col)
        out = out + QuasiModular::monomial(basis[static_cast<size_t>(col)], x[static_cast<size_t>(col)]);
    return out;
}

QuasiModular modular_derivative(const QuasiModular& f) {
    auto w = f.weight();
    if (!w) throw InhomogeneousInput("modular_derivative: inhomogeneous input");
    QuasiModular E2 = QuasiModular::P() * Rational(-1, 12);
    return f.theta() + E2 * f * Rational(*w);
}

QuasiModular delta_qm() {
    QuasiModular Q = QuasiModular::Q(), R = QuasiModular::R();
    return (Q * Q * Q - R * R) * Rational(1, 1728);
}

QSeries delta_poly_qexp(int N) { return qm_to_qseries(delta_qm(), N); }

QSeries delta_product_qexp(int N) {
    /* q prod (1-q^n)^24 = eta^24 (offset 24/24 = 1). */
    return eta(N).pow(24);
}

QSeries j_function(int N) {
    /* j = Q^3/Delta has a simple pole at infinity: compute at order N+1 so the
     * quotient retains N+1 coefficients past q^{-1}. */
    QSeries Q3 = qm_to_qseries(QuasiModular::Q(), N + 1).pow(3);
    return Q3 * delta_poly_qexp(N + 1).inverse();
}

int dim_Mk(int k) {
    if (k < 0 || k % 2 == 1) return 0;
    int h = k / 2;
    if (h % 6 == 1) return h / 6;
    return h / 6 + 1;
}

QuasiModular coeff_C(int k, int l) {
    if (k < 1 || l < 1) throw RangeError("coeff_C: indices must be >= 1");
    if ((k + l) % 2 == 1) return QuasiModular();
    Rational c = Rational(factorial(static_cast<unsigned>(k + l - 1))) /
                 Rational(Integer(factorial(static_cast<unsigned>(k - 1)) *
                                  factorial(static_cast<unsigned>(l - 1))));
    if (l % 2 == 0) c = -c;  // (-1)^{l+1}
    return eisenstein_qm(k + l) * c;
}

const QuasiModular& LaurentZ::coeff_of(int e) const {
    static const QuasiModular zero{};
    if (e < min_exp || e - min_exp >= static_cast<int>(coeffs.size())) return zero;
    return coeffs[static_cast<size_t>(e - min_exp)];
}

LaurentZ weierstrass_P1m(int m, int z_order) {
    if (m < 0) throw std::invalid_argument("weierstrass_P1m: m < 0");
    LaurentZ out;
    out.min_exp = -m - 1;
    out.coeffs.assign(static_cast<size_t>(z_order - out.min_exp) + 1, QuasiModular());
    Rational mfact = Rational(factorial(static_cast<unsigned>(m)));
    out.coeffs[0] = QuasiModular((m % 2 == 0) ? -mfact : mfact);  // (-1)^{m+1} m!
    for (int k = m + 1; k - m - 1 <= z_order; ++k) {
        if (k < 2) continue;  // E_1 = 0 in the lattice-sum convention
        QuasiModular Ek = eisenstein_qm(k);
        if (Ek.is_zero()) continue;
        Rational b = mfact * Rational(binomial_int(k - 1, m));
        out.coeffs[static_cast<size_t>((k - m - 1) - out.min_exp)] = Ek * b;
    }
    return out;
}

Rational square_bracket_coeff(int k, int i, int m) {
    if (i < 0 || m < 0) return Rational(0);
    if (i == 0) return m == 0 ? Rational(1) : Rational(0);
    /* binom(k-1+x, i) = prod_{t=0}^{i-1} (k-1-t+x) / i! as a polynomial in x. */
    std::vector<Rational> poly{Rational(1)};
    for (int t = 0; t < i; ++t) {
        std::vector<Rational> next(poly.size() + 1, Rational(0));
        Rational a(k - 1 - t);
        for (size_t d = 0; d < poly.size(); ++d) {
            next[d] += poly[d] * a;
            next[d + 1] += poly[d];
        }
        poly = std::move(next);
    }
    if (m >= static_cast<int>(poly.size())) return Rational(0);
    return poly[static_cast<size_t>(m)] / Rational(factorial(static_cast<unsigned>(i)));
}

std::complex<double> qs_eval_numeric(const QSeries& f, std::complex<double> tau) {
    if (tau.imag() <= 0.0)
        throw NonPositiveImaginaryPart("qs_eval_numeric: Im(tau) <= 0");
    const std::complex<double> two_pi_i(0.0, 2.0 * 3.14159265358979323846);
    std::complex<double> q = std::exp(two_pi_i * tau);
    std::complex<double> acc(0.0, 0.0);
    std::complex<double> qn = std::exp(two_pi_i * tau * f.offset().to_double());
    for (int n = 0; n <= f.trunc_order(); ++n) {
        acc += f.coeff(n).to_double() * qn;
        qn *= q;
    }
    return acc;
}

std::complex<double> qm_eval_numeric(const QuasiModular& f, std::complex<double> tau, int N) {
    return qs_eval_numeric(qm_to_qseries(f, N), tau);
}

}  // namespace voam
