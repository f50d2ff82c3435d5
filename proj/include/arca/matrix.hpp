#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace arca {

using Vec = std::vector<double>;

// Dense row-major matrix of doubles. Bare-bones on purpose: the project needs
// exactly the handful of kernels below, with a summation order that is fixed
// by this code (reproducibility) rather than by a BLAS.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    Vec a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), a(r * c, fill) {}

    double* row(std::size_t r) { return a.data() + r * cols; }
    const double* row(std::size_t r) const { return a.data() + r * cols; }
    double& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    void zero() { a.assign(a.size(), 0.0); }
    bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

inline double dot(const double* x, const double* y, std::size_t n) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s0 += x[i] * y[i];
        s1 += x[i + 1] * y[i + 1];
        s2 += x[i + 2] * y[i + 2];
        s3 += x[i + 3] * y[i + 3];
    }
    for (; i < n; ++i) s0 += x[i] * y[i];
    return ((s0 + s1) + (s2 + s3));
}

inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

// C (MxN) = [C +] A (MxK) * B^T, with B stored row-major NxK.
// 4x4 register tiling keeps B rows hot across neighbouring output rows.
inline void gemm_nt(const Mat& A, const Mat& B, Mat& C, bool accumulate) {
    assert(A.cols == B.cols && C.rows == A.rows && C.cols == B.rows);
    const std::size_t M = A.rows, N = B.rows, K = A.cols;
    if (!accumulate) C.zero();
    std::size_t m = 0;
    for (; m + 4 <= M; m += 4) {
        const double* a0 = A.row(m);
        const double* a1 = A.row(m + 1);
        const double* a2 = A.row(m + 2);
        const double* a3 = A.row(m + 3);
        std::size_t n = 0;
        for (; n + 4 <= N; n += 4) {
            const double* b0 = B.row(n);
            const double* b1 = B.row(n + 1);
            const double* b2 = B.row(n + 2);
            const double* b3 = B.row(n + 3);
            double c00 = 0, c01 = 0, c02 = 0, c03 = 0;
            double c10 = 0, c11 = 0, c12 = 0, c13 = 0;
            double c20 = 0, c21 = 0, c22 = 0, c23 = 0;
            double c30 = 0, c31 = 0, c32 = 0, c33 = 0;
            for (std::size_t k = 0; k < K; ++k) {
                const double v0 = a0[k], v1 = a1[k], v2 = a2[k], v3 = a3[k];
                const double w0 = b0[k], w1 = b1[k], w2 = b2[k], w3 = b3[k];
                c00 += v0 * w0; c01 += v0 * w1; c02 += v0 * w2; c03 += v0 * w3;
                c10 += v1 * w0; c11 += v1 * w1; c12 += v1 * w2; c13 += v1 * w3;
                c20 += v2 * w0; c21 += v2 * w1; c22 += v2 * w2; c23 += v2 * w3;
                c30 += v3 * w0; c31 += v3 * w1; c32 += v3 * w2; c33 += v3 * w3;
            }
            double* r0 = C.row(m) + n;
            double* r1 = C.row(m + 1) + n;
            double* r2 = C.row(m + 2) + n;
            double* r3 = C.row(m + 3) + n;
            r0[0] += c00; r0[1] += c01; r0[2] += c02; r0[3] += c03;
            r1[0] += c10; r1[1] += c11; r1[2] += c12; r1[3] += c13;
            r2[0] += c20; r2[1] += c21; r2[2] += c22; r2[3] += c23;
            r3[0] += c30; r3[1] += c31; r3[2] += c32; r3[3] += c33;
        }
        for (; n < N; ++n) {
            const double* b = B.row(n);
            C.row(m)[n] += dot(a0, b, K);
            C.row(m + 1)[n] += dot(a1, b, K);
            C.row(m + 2)[n] += dot(a2, b, K);
            C.row(m + 3)[n] += dot(a3, b, K);
        }
    }
    for (; m < M; ++m) {
        const double* am = A.row(m);
        for (std::size_t n = 0; n < N; ++n) C.row(m)[n] += dot(am, B.row(n), K);
    }
}

// C (MxN) = [C +] A (MxK) * B (KxN).
inline void gemm_nn(const Mat& A, const Mat& B, Mat& C, bool accumulate) {
    assert(A.cols == B.rows && C.rows == A.rows && C.cols == B.cols);
    const std::size_t M = A.rows, N = B.cols, K = A.cols;
    if (!accumulate) C.zero();
    std::size_t m = 0;
    for (; m + 4 <= M; m += 4) {
        double* c0 = C.row(m);
        double* c1 = C.row(m + 1);
        double* c2 = C.row(m + 2);
        double* c3 = C.row(m + 3);
        for (std::size_t k = 0; k < K; ++k) {
            const double* b = B.row(k);
            const double v0 = A.row(m)[k], v1 = A.row(m + 1)[k];
            const double v2 = A.row(m + 2)[k], v3 = A.row(m + 3)[k];
            for (std::size_t n = 0; n < N; ++n) {
                const double w = b[n];
                c0[n] += v0 * w;
                c1[n] += v1 * w;
                c2[n] += v2 * w;
                c3[n] += v3 * w;
            }
        }
    }
    for (; m < M; ++m) {
        double* c = C.row(m);
        for (std::size_t k = 0; k < K; ++k) axpy(A.row(m)[k], B.row(k), c, N);
    }
}

// C (K1xK2) += A^T * B where A is MxK1 and B is MxK2 (both row-major).
inline void gemm_tn_acc(const Mat& A, const Mat& B, Mat& C) {
    assert(A.rows == B.rows && C.rows == A.cols && C.cols == B.cols);
    const std::size_t M = A.rows, K1 = A.cols, K2 = B.cols;
    std::size_t k = 0;
    for (; k + 4 <= K1; k += 4) {
        double* c0 = C.row(k);
        double* c1 = C.row(k + 1);
        double* c2 = C.row(k + 2);
        double* c3 = C.row(k + 3);
        for (std::size_t m = 0; m < M; ++m) {
            const double* b = B.row(m);
            const double* am = A.row(m) + k;
            const double v0 = am[0], v1 = am[1], v2 = am[2], v3 = am[3];
            for (std::size_t n = 0; n < K2; ++n) {
                const double w = b[n];
                c0[n] += v0 * w;
                c1[n] += v1 * w;
                c2[n] += v2 * w;
                c3[n] += v3 * w;
            }
        }
    }
    for (; k < K1; ++k) {
        double* c = C.row(k);
        for (std::size_t m = 0; m < M; ++m) axpy(A.row(m)[k], B.row(m), c, K2);
    }
}

} // namespace arca
