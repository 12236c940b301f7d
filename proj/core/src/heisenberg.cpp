#include "voam/heisenberg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "voam/errors.hpp"

namespace voam {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int k : parts)
        if (k <= 0) throw std::invalid_argument("Partition: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
}

Partition Partition::parse(const std::string& s) {
    std::vector<int> parts;
    if (s.find('^') != std::string::npos || s.find(' ') != std::string::npos) {
        /* "1^3 2^2 5" */
        std::istringstream is(s);
        std::string tok;
        while (is >> tok) {
            size_t caret = tok.find('^');
            int k = std::stoi(tok.substr(0, caret));
            int e = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            if (e < 0) throw std::invalid_argument("Partition::parse: negative multiplicity");
            for (int t = 0; t < e; ++t) parts.push_back(k);
        }
    } else if (!s.empty()) {
        /* "1,1,1,2,2,5" */
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

int Partition::weight() const {
    int w = 0;
    for (int k : parts) w += k;
    return w;
}

std::map<int, int> Partition::exponents() const {
    std::map<int, int> e;
    for (int k : parts) ++e[k];
    return e;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, e] : exponents()) {
        if (!first) os << " ";
        first = false;
        os << k;
        if (e > 1) os << "^" << e;
    }
    os << "}";
    return os.str();
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(n, n == 0 ? 1 : n);
    return out;
}

std::vector<Pairing> enumerate_pairings(int n) {
    std::vector<Pairing> out;
    if (n < 0 || n % 2 == 1) return out;
    std::vector<bool> used(static_cast<size_t>(n), false);
    Pairing cur;
    std::function<void()> rec = [&]() {
        int i = -1;
        for (int t = 0; t < n; ++t)
            if (!used[static_cast<size_t>(t)]) { i = t; break; }
        if (i < 0) {
            out.push_back(cur);
            return;
        }
        used[static_cast<size_t>(i)] = true;
        for (int j = i + 1; j < n; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            used[static_cast<size_t>(j)] = true;
            cur.emplace_back(i, j);
            rec();
            cur.pop_back();
            used[static_cast<size_t>(j)] = false;
        }
        used[static_cast<size_t>(i)] = false;
    };
    rec();
    return out;
}

QuasiModular qv_involution_sum(const Partition& p) {
    int n = p.size();
    if (n % 2 == 1) return QuasiModular();
    QuasiModular sum;
    for (const Pairing& phi : enumerate_pairings(n)) {
        QuasiModular term{Rational(1)};
        for (const auto& [i, j] : phi)
            term = term * coeff_C(p.parts[static_cast<size_t>(i)], p.parts[static_cast<size_t>(j)]);
        sum = sum + term;
    }
    return sum;
}

namespace {

QuasiModular qv_zhu_memo(std::vector<int> parts, std::map<std::vector<int>, QuasiModular>& memo) {
    if (parts.empty()) return QuasiModular{Rational(1)};
    if (parts.size() % 2 == 1) return QuasiModular();
    auto it = memo.find(parts);
    if (it != memo.end()) return it->second;
    /* Z(a[-k_1]w) = sum_j C(k_1, k_j) Z(w with slot j removed). */
    QuasiModular sum;
    for (size_t j = 1; j < parts.size(); ++j) {
        QuasiModular c = coeff_C(parts[0], parts[j]);
        if (c.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(parts.size() - 2);
        for (size_t t = 1; t < parts.size(); ++t)
            if (t != j) rest.push_back(parts[t]);
        sum = sum + c * qv_zhu_memo(std::move(rest), memo);
    }
    memo[parts] = sum;
    return sum;
}

}  // namespace

QuasiModular qv_zhu_recursion(const Partition& p) {
    std::map<std::vector<int>, QuasiModular> memo;
    return qv_zhu_memo(p.parts, memo);
}

QSeries z1_heisenberg(const Partition& p, int N) {
    return qm_to_qseries(qv_involution_sum(p), N) * eta_inverse(N);
}

Rational liz_norm(const Partition& p) {
    Rational out(1);
    for (const auto& [k, e] : p.exponents()) {
        Rational f(1);
        for (int t = 0; t < e; ++t) f *= Rational(-k);
        out *= f * Rational(factorial(static_cast<unsigned>(e)));
    }
    return out;
}

PairingSumFn g_n_genus0(int n) {
    PairingSumFn f;
    f.n = n;
    f.pairings = enumerate_pairings(n);
    return f;
}

namespace {

void require_distinct(const std::vector<Rational>& z) {
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j)
            if (z[i] == z[j]) throw CoincidentPoints("genus-zero evaluation at coincident points");
}

}  // namespace

Rational eval_g_n_genus0(const PairingSumFn& f, const std::vector<Rational>& z) {
    if (static_cast<int>(z.size()) != f.n)
        throw std::invalid_argument("eval_g_n_genus0: arity mismatch");
    require_distinct(z);
    Rational sum(0);
    for (const Pairing& phi : f.pairings) {
        Rational term(1);
        for (const auto& [i, j] : phi) {
            Rational d = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            term *= Rational(1) / (d * d);
        }
        sum += term;
    }
    return sum;
}

Rational g_n_genus0_recursive(const std::vector<Rational>& z) {
    require_distinct(z);
    std::function<Rational(const std::vector<Rational>&)> rec =
        [&](const std::vector<Rational>& pts) -> Rational {
        if (pts.size() % 2 == 1) return Rational(0);
        if (pts.empty()) return Rational(1);
        Rational sum(0);
        for (size_t i = 1; i < pts.size(); ++i) {
            Rational d = pts[0] - pts[i];
            std::vector<Rational> rest;
            rest.reserve(pts.size() - 2);
            for (size_t t = 1; t < pts.size(); ++t)
                if (t != i) rest.push_back(pts[t]);
            sum += Rational(1) / (d * d) * rec(rest);
        }
        return sum;
    };
    return rec(z);
}

}  // namespace voam
