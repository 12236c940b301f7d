#include "voam/lattice.hpp"

#include <functional>

#include "voam/errors.hpp"
#include "voam/linalg.hpp"

namespace voam {

namespace {

/* LDL^T data for x^T G x = sum_i d_i (x_i + sum_{j>i} u_{ij} x_j)^2. */
struct Cholesky {
    std::vector<Rational> d;
    std::vector<std::vector<Rational>> u;  // u[i][j] for j > i
};

Cholesky decompose(const EvenLattice& L) {
    int n = L.rank();
    RatMatrix A(static_cast<size_t>(n), RatVector(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            A[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rational(L.gram[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    Cholesky ch;
    ch.d.assign(static_cast<size_t>(n), Rational(0));
    ch.u.assign(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i) {
        Rational d = A[static_cast<size_t>(i)][static_cast<size_t>(i)];
        if (!(d > Rational(0)))
            throw NotPositiveDefinite("lattice: Gram matrix is not positive definite");
        ch.d[static_cast<size_t>(i)] = d;
        for (int j = i + 1; j < n; ++j)
            ch.u[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                A[static_cast<size_t>(i)][static_cast<size_t>(j)] / d;
        for (int r = i + 1; r < n; ++r)
            for (int s = i + 1; s < n; ++s)
                A[static_cast<size_t>(r)][static_cast<size_t>(s)] -=
                    ch.u[static_cast<size_t>(i)][static_cast<size_t>(r)] *
                    A[static_cast<size_t>(i)][static_cast<size_t>(s)];
    }
    return ch;
}

}  // namespace

void EvenLattice::validate() const {
    int n = rank();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(gram[static_cast<size_t>(i)].size()) != n)
            throw std::invalid_argument("EvenLattice: Gram matrix not square");
        if (gram[static_cast<size_t>(i)][static_cast<size_t>(i)] % 2 != 0)
            throw std::invalid_argument("EvenLattice: diagonal entries must be even");
        for (int j = 0; j < n; ++j)
            if (gram[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                gram[static_cast<size_t>(j)][static_cast<size_t>(i)])
                throw std::invalid_argument("EvenLattice: Gram matrix not symmetric");
    }
    decompose(*this);  // throws NotPositiveDefinite
}

EvenLattice e8_lattice() {
    /* Cartan matrix of E8: chain 1..7 with node 8 attached to node 5
     * (arm lengths 4, 2, 1 from the trivalent node). */
    EvenLattice L;
    L.gram = {
        {2, -1, 0, 0, 0, 0, 0, 0},
        {-1, 2, -1, 0, 0, 0, 0, 0},
        {0, -1, 2, -1, 0, 0, 0, 0},
        {0, 0, -1, 2, -1, 0, 0, 0},
        {0, 0, 0, -1, 2, -1, 0, -1},
        {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, 0},
        {0, 0, 0, 0, -1, 0, 0, 2},
    };
    return L;
}

std::vector<Integer> shell_counts(const EvenLattice& L, int N) {
    L.validate();
    int n = L.rank();
    std::vector<Integer> counts(static_cast<size_t>(N) + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    Cholesky ch = decompose(L);
    Rational bound(2l * N);
    std::vector<long> x(static_cast<size_t>(n), 0);
    /* Enumerate from the last coordinate inward; at each level the feasible
     * x_i form a contiguous interval around -center, scanned outward with
     * exact rational tests (no floating point). */
    std::function<void(int, const Rational&)> rec = [&](int i, const Rational& used) {
        if (i < 0) {
            Rational q = used / Rational(2);
            counts[q.num().get_ui()] += 1;
            return;
        }
        Rational center(0);
        for (int j = i + 1; j < n; ++j)
            center += ch.u[static_cast<size_t>(i)][static_cast<size_t>(j)] * Rational(x[static_cast<size_t>(j)]);
        Rational budget = bound - used;
        const Rational& d = ch.d[static_cast<size_t>(i)];
        auto term = [&](long v) {
            Rational t = Rational(v) + center;
            return d * t * t;
        };
        /* Nearest integer to -center as the scan seed. */
        Rational mc = -center;
        Integer lo_num = mc.num(), lo_den = mc.den();
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), lo_num.get_mpz_t(), lo_den.get_mpz_t());
        long seed = fl.get_si();
        for (long v = seed; term(v) <= budget; --v) {
            x[static_cast<size_t>(i)] = v;
            rec(i - 1, used + term(v));
        }
        for (long v = seed + 1; term(v) <= budget; ++v) {
            x[static_cast<size_t>(i)] = v;
            rec(i - 1, used + term(v));
        }
    };
    rec(n - 1, Rational(0));
    return counts;
}

std::vector<Integer> shell_counts_box(const EvenLattice& L, int N) {
    L.validate();
    int n = L.rank();
    std::vector<Integer> counts(static_cast<size_t>(N) + 1, 0);
    if (n == 0) {
        counts[0] = 1;
        return counts;
    }
    RatMatrix G(static_cast<size_t>(n), RatVector(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            G[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                Rational(L.gram[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    RatMatrix Ginv = invert_matrix(G);
    /* For x^T G x <= 2N every coordinate obeys x_i^2 <= 2N (G^{-1})_{ii}. */
    std::vector<long> B(static_cast<size_t>(n), 0);
    double volume = 1.0;
    for (int i = 0; i < n; ++i) {
        Rational cap = Rational(2l * N) * Ginv[static_cast<size_t>(i)][static_cast<size_t>(i)];
        long b = 0;
        while (Rational((b + 1)) * Rational((b + 1)) <= cap) ++b;
        B[static_cast<size_t>(i)] = b;
        volume *= 2.0 * static_cast<double>(b) + 1.0;
    }
    if (volume > 2e7)
        throw std::invalid_argument("shell_counts_box: search box too large for the oracle");
    std::vector<long> x(static_cast<size_t>(n), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            long q2 = 0;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    q2 += L.gram[static_cast<size_t>(a)][static_cast<size_t>(b)] * x[static_cast<size_t>(a)] *
                          x[static_cast<size_t>(b)];
            if (q2 >= 0 && q2 / 2 <= N) counts[static_cast<size_t>(q2 / 2)] += 1;
            return;
        }
        for (long v = -B[static_cast<size_t>(i)]; v <= B[static_cast<size_t>(i)]; ++v) {
            x[static_cast<size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return counts;
}

QSeries theta_series(const EvenLattice& L, int N) {
    std::vector<Integer> counts = shell_counts(L, N);
    std::vector<Rational> c(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) c[i] = Rational(counts[i]);
    return QSeries(Rational(0), std::move(c));
}

QSeries lattice_voa_partition(const EvenLattice& L, int N) {
    return theta_series(L, N) * eta_inverse(N).pow(L.rank());
}

}  // namespace voam
