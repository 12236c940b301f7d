#include "voam/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace voam {

QSeries::QSeries(Rational offset, std::vector<Rational> coeffs)
    : offset_(std::move(offset)), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("QSeries: empty coefficient sequence");
}

QSeries QSeries::zero(int N) {
    return QSeries(Rational(0), std::vector<Rational>(N + 1, Rational(0)));
}

QSeries QSeries::one(int N) {
    std::vector<Rational> c(N + 1, Rational(0));
    c[0] = Rational(1);
    return QSeries(Rational(0), std::move(c));
}

const Rational& QSeries::coeff(int n) const {
    if (n < 0 || n > trunc_order())
        throw std::out_of_range("QSeries::coeff: index past truncation order");
    return coeffs_[static_cast<size_t>(n)];
}

Rational QSeries::coeff_at(const Rational& e) const {
    Rational d = e - offset_;
    if (!d.is_integer()) return Rational(0);
    Integer n = d.num();
    if (n < 0) return Rational(0);
    if (n > trunc_order())
        throw std::out_of_range("QSeries::coeff_at: exponent past truncation horizon");
    return coeffs_[n.get_ui()];
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

QSeries QSeries::shifted(const Rational& d) const {
    return QSeries(offset_ + d, coeffs_);
}

QSeries QSeries::truncated(int N) const {
    if (N < 0 || N > trunc_order())
        throw std::out_of_range("QSeries::truncated: bad order");
    return QSeries(offset_, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + N + 1));
}

QSeries QSeries::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return QSeries(offset_, std::move(c));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    /* A vanishing operand acts as the additive identity regardless of the
     * frame it was built in; otherwise offsets must differ by an integer. */
    Rational d = b.offset_ - a.offset_;
    if (!d.is_integer()) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return b;
        throw IncompatibleOffset("QSeries add: offsets differ by " + d.str());
    }
    if (d < Rational(0)) return b + a;
    long shift = d.num().get_si();
    /* Both operands are valid through exponents offset+N; the sum is valid
     * through the smaller reach. */
    long N = std::min<long>(a.trunc_order(), shift + b.trunc_order());
    if (N < 0) throw IncompatibleOffset("QSeries add: no overlapping coefficients");
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    for (long n = 0; n <= N; ++n) {
        c[static_cast<size_t>(n)] = a.coeffs_[static_cast<size_t>(n)];
        if (n >= shift) c[static_cast<size_t>(n)] += b.coeffs_[static_cast<size_t>(n - shift)];
    }
    return QSeries(a.offset_, std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    int N = std::min(a.trunc_order(), b.trunc_order());
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    for (int i = 0; i <= N; ++i) {
        if (a.coeffs_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= N; ++j)
            c[static_cast<size_t>(i + j)] += a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
    }
    return QSeries(a.offset_ + b.offset_, std::move(c));
}

QSeries QSeries::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * s;
    return QSeries(offset_, std::move(c));
}

QSeries QSeries::inverse() const {
    /* Normalize away a vanishing head: f = a_m q^{mu+m} (1 + ...) inverts to
     * a series with offset -(mu+m).  A fully zero series has no inverse. */
    int m = -1;
    for (int n = 0; n <= trunc_order(); ++n)
        if (!coeffs_[static_cast<size_t>(n)].is_zero()) { m = n; break; }
    if (m < 0) throw ZeroLeadingTerm("QSeries::inverse: zero series");
    int N = trunc_order() - m;
    const Rational& lead = coeffs_[static_cast<size_t>(m)];
    std::vector<Rational> b(static_cast<size_t>(N) + 1, Rational(0));
    b[0] = Rational(1) / lead;
    /* 1/(sum a_{m+n} q^n): b_n = -(1/a_m) sum_{k=1}^{n} a_{m+k} b_{n-k}. */
    for (int n = 1; n <= N; ++n) {
        Rational s(0);
        for (int k = 1; k <= n; ++k)
            s += coeffs_[static_cast<size_t>(m + k)] * b[static_cast<size_t>(n - k)];
        b[static_cast<size_t>(n)] = -s / lead;
    }
    return QSeries(-(offset_ + Rational(m)), std::move(b));
}

QSeries QSeries::pow(long e) const {
    if (e == 0) return QSeries::one(trunc_order());
    if (e < 0) return inverse().pow(-e);
    QSeries acc = QSeries::one(trunc_order()).shifted(Rational(0));
    QSeries base = *this;
    bool first = true;
    /* Binary powering; truncation order is preserved throughout. */
    while (e > 0) {
        if (e & 1) {
            acc = first ? base : acc * base;
            first = false;
        }
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

QSeries QSeries::theta() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t n = 0; n < coeffs_.size(); ++n)
        c[n] = (offset_ + Rational(static_cast<long>(n))) * coeffs_[n];
    return QSeries(offset_, std::move(c));
}

bool operator==(const QSeries& a, const QSeries& b) {
    if (a.offset_ != b.offset_) return false;
    int N = std::min(a.trunc_order(), b.trunc_order());
    for (int n = 0; n <= N; ++n)
        if (a.coeffs_[static_cast<size_t>(n)] != b.coeffs_[static_cast<size_t>(n)]) return false;
    return true;
}

bool QSeries::agree(const QSeries& a, const QSeries& b) {
    Rational d = b.offset_ - a.offset_;
    if (!d.is_integer()) return a.is_zero() && b.is_zero();
    if (d < Rational(0)) return agree(b, a);
    long shift = d.num().get_si();
    /* Compare within the shared reach; below b's frame its coefficient is a
     * genuine zero, beyond either truncation nothing is asserted. */
    long N = std::min<long>(a.trunc_order(), shift + b.trunc_order());
    for (long n = 0; n <= N; ++n) {
        Rational bv(0);
        if (n >= shift) bv = b.coeffs_[static_cast<size_t>(n - shift)];
        if (a.coeffs_[static_cast<size_t>(n)] != bv) return false;
    }
    return true;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool any = false;
    for (int n = 0; n <= trunc_order(); ++n) {
        const Rational& c = coeffs_[static_cast<size_t>(n)];
        if (c.is_zero()) continue;
        Rational e = offset_ + Rational(n);
        bool neg = c < Rational(0);
        if (any) os << (neg ? " - " : " + ");
        else if (neg) os << "-";
        Rational a = neg ? -c : c;
        os << a.str();
        if (!e.is_zero()) os << "·q^(" << e.str() << ")";
        any = true;
    }
    if (!any) os << "0";
    os << " + O(q^(" << (offset_ + Rational(trunc_order() + 1)).str() << "))";
    return os.str();
}

QSeries eta(int N) {
    /* prod_{n>=1}(1-q^n) by repeated sparse multiplication by (1-q^n). */
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    c[0] = Rational(1);
    for (int n = 1; n <= N; ++n)
        for (int k = N; k >= n; --k)
            c[static_cast<size_t>(k)] -= c[static_cast<size_t>(k - n)];
    return QSeries(Rational(1, 24), std::move(c));
}

QSeries eta_inverse(int N) {
    return eta(N).inverse();
}

Integer partition_count(int n) {
    if (n < 0) throw std::invalid_argument("partition_count: negative n");
    static std::vector<Integer> cache{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (n < static_cast<int>(cache.size())) return cache[static_cast<size_t>(n)];
    QSeries inv = eta_inverse(n);
    cache.resize(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) cache[static_cast<size_t>(k)] = inv.coeff(k).num();
    return cache[static_cast<size_t>(n)];
}

}  // namespace voam
