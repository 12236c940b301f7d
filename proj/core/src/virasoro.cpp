#include "voam/virasoro.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "voam/errors.hpp"

namespace voam {

namespace {

/* A state is a linear combination of canonical monomials
 * L_{-m_1}...L_{-m_k}|0> with m_1 >= ... >= m_k >= 2, stored as the part
 * list [m_1,...,m_k]. */
using State = std::map<std::vector<int>, PolyC>;

void add_to(State& s, const std::vector<int>& mono, const PolyC& coeff) {
    if (coeff.is_zero()) return;
    auto it = s.find(mono);
    if (it == s.end()) {
        s[mono] = coeff;
    } else {
        it->second = it->second + coeff;
        if (it->second.is_zero()) s.erase(it);
    }
}

/* (n^3-n)/12 · c, the central contribution of [L_n, L_{-n}]. */
PolyC central_term(int n) {
    long n3 = static_cast<long>(n) * n * n;
    return PolyC::c() * Rational(n3 - n, 12);
}

struct Normalizer {
    std::map<std::pair<int, std::vector<int>>, State> memo;

    /* L_n applied to a canonical monomial, re-expressed canonically. */
    const State& apply_mono(int n, const std::vector<int>& mono) {
        auto key = std::make_pair(n, mono);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        State out;
        if (mono.empty()) {
            if (n <= -2) out[{-n}] = PolyC(Rational(1));
            /* L_n|0> = 0 for n >= -1. */
        } else if (n <= -2 && -n >= mono[0]) {
            std::vector<int> ext;
            ext.reserve(mono.size() + 1);
            ext.push_back(-n);
            ext.insert(ext.end(), mono.begin(), mono.end());
            out[ext] = PolyC(Rational(1));
        } else {
            /* Commute past the head: with m = mono[0],
             * L_n L_{-m} = L_{-m} L_n + (n+m) L_{n-m} + delta_{n,m} (n^3-n)/12 c. */
            int m = mono[0];
            std::vector<int> tail(mono.begin() + 1, mono.end());
            State through = apply(-m, apply_mono(n, tail));
            for (const auto& [mo, co] : through) add_to(out, mo, co);
            State lowered = apply_mono(n - m, tail);
            for (const auto& [mo, co] : lowered) add_to(out, mo, co * Rational(n + m));
            if (n == m) add_to(out, tail, central_term(n));
        }
        return memo[key] = std::move(out);
    }

    State apply(int n, const State& s) {
        State out;
        for (const auto& [mono, coeff] : s)
            for (const auto& [mo, co] : apply_mono(n, mono)) add_to(out, mo, co * coeff);
        return out;
    }
};

}  // namespace

PolyC vacuum_expectation(const VirasoroWord& word) {
    Normalizer norm;  // per-call memo keeps the function thread-safe
    State s;
    s[{}] = PolyC(Rational(1));
    for (size_t i = word.size(); i-- > 0;) s = norm.apply(word[i], s);
    auto it = s.find({});
    return it == s.end() ? PolyC() : it->second;
}

PolyC vacuum_expectation_naive(const VirasoroWord& word) {
    /* Brute-force rewriting: sort each word ascending by adjacent
     * transpositions via the commutator, then read off vacuum terms. */
    PolyC result;
    std::deque<std::pair<VirasoroWord, PolyC>> work;
    work.emplace_back(word, PolyC(Rational(1)));
    while (!work.empty()) {
        auto [w, coeff] = work.front();
        work.pop_front();
        size_t t = 0;
        bool sorted = true;
        for (; t + 1 < w.size(); ++t)
            if (w[t] > w[t + 1]) {
                sorted = false;
                break;
            }
        if (sorted) {
            if (w.empty()) {
                result = result + coeff;
            } else if (w.back() >= -1) {
                /* annihilates the vacuum */
            }
            /* else: a genuine creation word, orthogonal to the vacuum. */
            continue;
        }
        int a = w[t], b = w[t + 1];
        VirasoroWord swapped = w;
        std::swap(swapped[t], swapped[t + 1]);
        work.emplace_back(std::move(swapped), coeff);
        VirasoroWord merged;
        merged.reserve(w.size() - 1);
        merged.insert(merged.end(), w.begin(), w.begin() + static_cast<long>(t));
        merged.push_back(a + b);
        merged.insert(merged.end(), w.begin() + static_cast<long>(t) + 2, w.end());
        work.emplace_back(std::move(merged), coeff * Rational(a - b));
        if (a + b == 0) {
            VirasoroWord dropped;
            dropped.reserve(w.size() - 2);
            dropped.insert(dropped.end(), w.begin(), w.begin() + static_cast<long>(t));
            dropped.insert(dropped.end(), w.begin() + static_cast<long>(t) + 2, w.end());
            work.emplace_back(std::move(dropped), coeff * central_term(a));
        }
    }
    return result;
}

std::vector<std::vector<int>> vir_basis(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            std::vector<int> w = cur;
            std::sort(w.begin(), w.end(), std::greater<int>());
            out.push_back(std::move(w));
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 2; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<PolyC>> gram_matrix(int n) {
    auto basis = vir_basis(n);
    size_t t = basis.size();
    std::vector<std::vector<PolyC>> M(t, std::vector<PolyC>(t));
    for (size_t i = 0; i < t; ++i)
        for (size_t j = 0; j < t; ++j) {
            /* <L_{-a}1, L_{-b}1> = <1, (L_{-a_1}...L_{-a_k})^dagger L_{-b}1>
             * with dagger reversing and flipping signs. */
            VirasoroWord w;
            for (size_t s = basis[i].size(); s-- > 0;) w.push_back(basis[i][s]);
            for (int m : basis[j]) w.push_back(-m);
            M[i][j] = vacuum_expectation(w);
        }
    return M;
}

PolyC kac_det(int n) {
    auto M = gram_matrix(n);
    size_t t = M.size();
    if (t == 0) return PolyC(Rational(1));
    /* Laplace expansion with memoization on the set of free columns. */
    std::map<unsigned long, PolyC> memo;
    std::function<PolyC(size_t, unsigned long)> det = [&](size_t row, unsigned long cols) -> PolyC {
        if (row == t) return PolyC(Rational(1));
        auto it = memo.find(cols);
        if (it != memo.end()) return it->second;
        PolyC acc;
        int sign = 1;
        for (size_t j = 0; j < t; ++j) {
            if (!(cols & (1ul << j))) continue;
            if (!M[row][j].is_zero()) {
                PolyC sub = det(row + 1, cols & ~(1ul << j));
                PolyC term = M[row][j] * sub;
                acc = sign > 0 ? acc + term : acc - term;
            }
            sign = -sign;
        }
        return memo[cols] = acc;
    };
    return det(0, (1ul << t) - 1);
}

Rational c_pq(int p, int q) {
    if (p < 2 || q < 2) throw RangeError("c_pq: p,q must be >= 2");
    if (std::gcd(p, q) != 1) throw NotCoprime("c_pq: p,q must be coprime");
    long d = p - q;
    return Rational(1) - Rational(6 * d * d, static_cast<long>(p) * q);
}

Rational h_rs(int p, int q, int r, int s) {
    if (p < 2 || q < 2) throw RangeError("h_rs: p,q must be >= 2");
    if (std::gcd(p, q) != 1) throw NotCoprime("h_rs: p,q must be coprime");
    if (r < 1 || r > q - 1 || s < 1 || s > p - 1)
        throw RangeError("h_rs: (r,s) out of range");
    long a = static_cast<long>(p) * r - static_cast<long>(q) * s;
    long d = p - q;
    return Rational(a * a - d * d, 4l * p * q);
}

std::vector<Rational> discrete_series_weights(int p, int q) {
    std::vector<Rational> out;
    for (int r = 1; r <= q - 1; ++r)
        for (int s = 1; s <= p - 1; ++s) {
            Rational h = h_rs(p, q, r, s);
            if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
        }
    std::sort(out.begin(), out.end());
    return out;
}

QSeries vir_graded_dim(int N) {
    /* prod_{n>=2}(1-q^n) expanded then inverted. */
    std::vector<Rational> c(static_cast<size_t>(N) + 1, Rational(0));
    c[0] = Rational(1);
    for (int n = 2; n <= N; ++n)
        for (int k = N; k >= n; --k)
            c[static_cast<size_t>(k)] -= c[static_cast<size_t>(k - n)];
    return QSeries(Rational(0), std::move(c)).inverse();
}

}  // namespace voam
