#include "voam/polyc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "voam/errors.hpp"

namespace voam {

void PolyC::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PolyC PolyC::c() { return PolyC(std::vector<Rational>{Rational(0), Rational(1)}); }

Rational PolyC::coeff(int d) const {
    if (d < 0 || d >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(d)];
}

PolyC PolyC::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return PolyC(std::move(c));
}

PolyC operator+(const PolyC& a, const PolyC& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return PolyC(std::move(c));
}

PolyC operator-(const PolyC& a, const PolyC& b) { return a + (-b); }

PolyC operator*(const PolyC& a, const PolyC& b) {
    if (a.is_zero() || b.is_zero()) return PolyC();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PolyC(std::move(c));
}

PolyC PolyC::operator*(const Rational& s) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * s;
    return PolyC(std::move(c));
}

Rational PolyC::eval(const Rational& c) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * c + coeffs_[i];
    return acc;
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) out.push_back(n / d);
        }
    }
    return out;
}

/* Divides f by (c - r); returns quotient, requires exact division. */
std::vector<Rational> deflate(const std::vector<Rational>& f, const Rational& r) {
    std::vector<Rational> q(f.size() - 1, Rational(0));
    Rational carry(0);
    for (size_t i = f.size(); i-- > 1;) {
        carry = f[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

}  // namespace

std::vector<Rational> PolyC::rational_roots() const {
    std::vector<Rational> roots;
    if (degree() < 1) return roots;
    /* Primitive integer form. */
    Integer lcm = 1;
    for (const Rational& a : coeffs_) {
        Integer d = a.den(), g;
        mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), d.get_mpz_t());
        lcm = lcm / g * d;
    }
    std::vector<Integer> f(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) f[i] = (coeffs_[i] * Rational(lcm)).num();
    size_t lo = 0;
    while (f[lo] == 0) ++lo;
    if (lo > 0) roots.push_back(Rational(0));
    for (const Integer& p : positive_divisors(f[lo]))
        for (const Integer& q : positive_divisors(f.back()))
            for (int sign : {1, -1}) {
                Rational cand(sign > 0 ? p : Integer(-p), q);
                if (std::find(roots.begin(), roots.end(), cand) != roots.end()) continue;
                if (eval(cand).is_zero()) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string PolyC::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& a = coeffs_[i];
        if (a.is_zero()) continue;
        bool neg = a < Rational(0);
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational m = neg ? -a : a;
        if (i == 0 || m != Rational(1)) os << m.str();
        if (i > 0) {
            if (m != Rational(1)) os << "·";
            os << "c";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::string PolyC::factored_str() const {
    if (is_zero()) return "0";
    if (degree() == 0) return coeffs_[0].str();
    /* Split off c^m and all rational linear factors, each rendered in
     * primitive integer form (q·c - p) for the root p/q. */
    std::vector<Rational> rest = coeffs_;
    size_t m = 0;
    while (rest[0].is_zero()) {
        rest.erase(rest.begin());
        ++m;
    }
    struct Factor {
        Integer a, b;  // a·c + b
        int mult;
    };
    std::vector<Factor> factors;
    PolyC probe{std::vector<Rational>(rest)};
    for (const Rational& r : probe.rational_roots()) {
        if (r.is_zero()) continue;
        int mult = 0;
        while (rest.size() > 1) {
            std::vector<Rational> q = deflate(rest, r);
            /* Exact iff the root still divides. */
            if (!PolyC{std::vector<Rational>(rest)}.eval(r).is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult > 0) factors.push_back({r.den(), -r.num(), mult});
    }
    /* rest is now the root-free part; fold its leading scalar out. */
    Rational scalar = rest.back();
    for (Rational& a : rest) a = a / scalar;
    for (const Factor& f : factors) {
        Rational an(f.a);
        for (int t = 0; t < f.mult; ++t) scalar /= an;
    }
    std::ostringstream os;
    bool need_dot = false;
    auto dot = [&]() {
        if (need_dot) os << "·";
        need_dot = true;
    };
    if (scalar != Rational(1) || (m == 0 && factors.empty() && rest.size() == 1)) {
        dot();
        if (scalar < Rational(0)) {
            os << "-";
            if (-scalar != Rational(1)) os << (-scalar).str();
            else if (m == 0 && factors.empty() && rest.size() == 1) os << "1";
        } else {
            os << scalar.str();
        }
    }
    if (m > 0) {
        dot();
        os << "c";
        if (m > 1) os << "^" << m;
    }
    for (const Factor& f : factors) {
        dot();
        os << "(";
        if (f.a != 1) os << f.a.get_str();
        os << "c";
        if (f.b > 0) os << "+" << f.b.get_str();
        else if (f.b < 0) os << "-" << Integer(-f.b).get_str();
        os << ")";
        if (f.mult > 1) os << "^" << f.mult;
    }
    if (rest.size() > 1) {
        dot();
        os << "(" << PolyC{std::vector<Rational>(rest)}.str() << ")";
    }
    return os.str();
}

Rational RatFnC::eval(const Rational& c) const {
    Rational d = den.eval(c);
    if (d.is_zero()) throw PoleAtC("RatFnC: evaluation at a pole, c = " + c.str());
    return num.eval(c) / d;
}

}  // namespace voam
