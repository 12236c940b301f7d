#include "voam/linalg.hpp"

#include <stdexcept>

namespace voam {

namespace {

/* Row-reduces [A | B] in place, returning false if A is singular. */
bool eliminate(RatMatrix& A, RatMatrix& B) {
    size_t n = A.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) return false;
        std::swap(A[piv], A[col]);
        std::swap(B[piv], B[col]);
        Rational inv = Rational(1) / A[col][col];
        for (size_t j = 0; j < n; ++j) A[col][j] *= inv;
        for (size_t j = 0; j < B[col].size(); ++j) B[col][j] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || A[r][col].is_zero()) continue;
            Rational f = A[r][col];
            for (size_t j = 0; j < n; ++j) A[r][j] -= f * A[col][j];
            for (size_t j = 0; j < B[r].size(); ++j) B[r][j] -= f * B[col][j];
        }
    }
    return true;
}

}  // namespace

RatVector solve_linear(RatMatrix A, RatVector b) {
    size_t n = A.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    RatMatrix B(n);
    for (size_t i = 0; i < n; ++i) B[i] = {b[i]};
    if (!eliminate(A, B)) throw std::domain_error("solve_linear: singular matrix");
    RatVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = B[i][0];
    return x;
}

RatMatrix invert_matrix(const RatMatrix& A) {
    size_t n = A.size();
    RatMatrix M = A;
    RatMatrix B(n, RatVector(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) B[i][i] = Rational(1);
    if (!eliminate(M, B)) throw std::domain_error("invert_matrix: singular matrix");
    return B;
}

Rational determinant(RatMatrix A) {
    size_t n = A.size();
    Rational det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && A[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(A[piv], A[col]);
            det = -det;
        }
        det *= A[col][col];
        Rational inv = Rational(1) / A[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (A[r][col].is_zero()) continue;
            Rational f = A[r][col] * inv;
            for (size_t j = col; j < n; ++j) A[r][j] -= f * A[col][j];
        }
    }
    return det;
}

}  // namespace voam
