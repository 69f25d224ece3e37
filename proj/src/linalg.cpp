#include "vanishforge/linalg.hpp"

#include <stdexcept>

namespace vanishforge {

Real matrix_max_abs(const CMatrix& a) {
    Real m = 0;
    for (const auto& row : a)
        for (const auto& v : row) {
            Real av = abs(v);
            if (av > m) m = av;
        }
    return m;
}

Real frobenius_norm(const CMatrix& a) {
    Real acc = 0;
    for (const auto& row : a)
        for (const auto& v : row) acc += norm_sq(v);
    return boost::multiprecision::sqrt(acc);
}

long numerical_rank(CMatrix a, const Real& threshold) {
    if (a.empty() || a[0].empty()) return 0;
    const long rows = static_cast<long>(a.size());
    const long cols = static_cast<long>(a[0].size());

    for (auto& row : a) {
        Real m = 0;
        for (const auto& v : row) {
            Real av = abs(v);
            if (av > m) m = av;
        }
        if (m > 0)
            for (auto& v : row) v = Complex(v.re / m, v.im / m);
    }

    std::vector<bool> row_used(rows, false), col_used(cols, false);
    long rank = 0;
    while (true) {
        long pr = -1, pc = -1;
        Real pmax = 0;
        for (long i = 0; i < rows; ++i) {
            if (row_used[i]) continue;
            for (long j = 0; j < cols; ++j) {
                if (col_used[j]) continue;
                Real av = abs(a[i][j]);
                if (av > pmax) {
                    pmax = av;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (pr < 0 || pmax < threshold) break;
        ++rank;
        row_used[pr] = true;
        col_used[pc] = true;
        Complex pivot = a[pr][pc];
        for (long i = 0; i < rows; ++i) {
            if (row_used[i]) continue;
            Complex factor = a[i][pc] / pivot;
            if (factor.is_zero()) continue;
            for (long j = 0; j < cols; ++j) {
                if (col_used[j]) continue;
                a[i][j] -= factor * a[pr][j];
            }
            a[i][pc] = Complex();
        }
    }
    return rank;
}

CMatrix invert(const CMatrix& a, const Real& threshold) {
    const long n = static_cast<long>(a.size());
    for (const auto& row : a)
        if (static_cast<long>(row.size()) != n) throw std::invalid_argument("invert: matrix not square");
    Real scale = matrix_max_abs(a);
    if (scale == 0) throw std::runtime_error("invert: zero matrix");

    CMatrix work = a;
    CMatrix inv(n, std::vector<Complex>(n));
    for (long i = 0; i < n; ++i) inv[i][i] = Complex(Real(1));

    for (long col = 0; col < n; ++col) {
        long pr = -1;
        Real pmax = 0;
        for (long i = col; i < n; ++i) {
            Real av = abs(work[i][col]);
            if (av > pmax) {
                pmax = av;
                pr = i;
            }
        }
        if (pr < 0 || pmax < threshold * scale)
            throw std::runtime_error("invert: pivot below rank threshold");
        std::swap(work[pr], work[col]);
        std::swap(inv[pr], inv[col]);
        Complex pivot = work[col][col];
        for (long j = 0; j < n; ++j) {
            work[col][j] /= pivot;
            inv[col][j] /= pivot;
        }
        for (long i = 0; i < n; ++i) {
            if (i == col) continue;
            Complex factor = work[i][col];
            if (factor.is_zero()) continue;
            for (long j = 0; j < n; ++j) {
                work[i][j] -= factor * work[col][j];
                inv[i][j] -= factor * inv[col][j];
            }
        }
    }
    return inv;
}

Real condition_estimate(const CMatrix& a, const Real& threshold) {
    CMatrix inv = invert(a, threshold);
    return frobenius_norm(a) * frobenius_norm(inv);
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    const long n = static_cast<long>(a.size());
    const long m = static_cast<long>(b[0].size());
    const long k = static_cast<long>(b.size());
    CMatrix out(n, std::vector<Complex>(m));
    for (long i = 0; i < n; ++i)
        for (long l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (long j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

}  // namespace vanishforge
