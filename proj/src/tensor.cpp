#include "vanishforge/tensor.hpp"

#include <stdexcept>

namespace vanishforge {

TensorElement make_tensor(long p1, long p2, CMatrix coeffs, std::optional<int> weight_parity) {
    if (!is_odd_prime(p1) || !is_odd_prime(p2))
        throw std::invalid_argument("tensor levels must be odd primes");
    if (static_cast<long>(coeffs.size()) != p1 - 2)
        throw std::invalid_argument("tensor coefficient matrix must have p1-2 rows");
    for (const auto& row : coeffs)
        if (static_cast<long>(row.size()) != p2 - 2)
            throw std::invalid_argument("tensor coefficient matrix must have p2-2 columns");
    if (weight_parity) {
        int k = ((*weight_parity % 2) + 2) % 2;
        for (long c = 0; c <= p1 - 3; ++c)
            for (long d = 0; d <= p2 - 3; ++d)
                if ((c + d) % 2 != k && !coeffs[c][d].is_zero())
                    throw std::invalid_argument("tensor coefficients violate the weight parity");
    }
    return TensorElement{p1, p2, std::move(coeffs), weight_parity};
}

TensorElement elementary_tensor(long p1, long p2, long c, long d) {
    if (c < 0 || c > p1 - 3 || d < 0 || d > p2 - 3)
        throw std::invalid_argument("elementary_tensor indices out of range");
    CMatrix m(p1 - 2, std::vector<Complex>(p2 - 2));
    m[c][d] = Complex(Real(1));
    return TensorElement{p1, p2, std::move(m), std::nullopt};
}

namespace {

// Taylor coefficient rows for alpha_0..alpha_{N-3} through z^T.
std::vector<std::vector<Complex>> alpha_taylor_rows(long N, long T, const PrecisionContext& ctx) {
    std::vector<WeakFunction> alphas = alpha_basis(N, ctx);
    std::vector<std::vector<Complex>> rows;
    rows.reserve(alphas.size());
    for (const auto& a : alphas) rows.push_back(taylor_coeffs(a, T + 1));
    return rows;
}

}  // namespace

BivariateSeries xi_map(const TensorElement& t, long T, const PrecisionContext& ctx) {
    if (T < 0) throw std::invalid_argument("xi_map requires T >= 0");
    auto rows1 = alpha_taylor_rows(t.p1, T, ctx);
    auto rows2 = alpha_taylor_rows(t.p2, T, ctx);

    BivariateSeries out;
    out.truncation = T;
    out.polys.assign(T + 1, {});
    for (long j = 0; j <= T; ++j) out.polys[j].assign(j + 1, Complex());

    for (long c = 0; c <= t.p1 - 3; ++c)
        for (long d = 0; d <= t.p2 - 3; ++d) {
            const Complex& a = t.coeffs[c][d];
            if (a.is_zero()) continue;
            // alpha_d^{(p2)}(z) * alpha_c^{(p1)}(z tau): z^j tau^l picks
            // rows1[c][l] * rows2[d][j-l]
            for (long j = 0; j <= T; ++j)
                for (long l = 0; l <= j; ++l) {
                    Complex contrib = rows1[c][l] * rows2[d][j - l];
                    if (!contrib.is_zero()) out.polys[j][l] += a * contrib;
                }
        }
    return out;
}

BivariateSeries multiply(const BivariateSeries& a, const BivariateSeries& b, long T) {
    BivariateSeries out;
    out.truncation = T;
    out.polys.assign(T + 1, {});
    for (long j = 0; j <= T; ++j) out.polys[j].assign(j + 1, Complex());
    for (long ja = 0; ja <= std::min(T, a.truncation); ++ja)
        for (long jb = 0; ja + jb <= T && jb <= b.truncation; ++jb) {
            long j = ja + jb;
            for (long la = 0; la < static_cast<long>(a.polys[ja].size()); ++la)
                for (long lb = 0; lb < static_cast<long>(b.polys[jb].size()); ++lb)
                    out.polys[j][la + lb] += a.polys[ja][la] * b.polys[jb][lb];
        }
    return out;
}

namespace {

Real series_max_abs(const BivariateSeries& s) {
    Real m = 0;
    for (const auto& p : s.polys)
        for (const auto& c : p) {
            Real a = abs(c);
            if (a > m) m = a;
        }
    return m;
}

bool significant(const Real& mag, const Real& scale, const PrecisionContext& ctx, const char* what) {
    if (mag > boost::multiprecision::sqrt(ctx.vanish_threshold) * scale) return true;
    if (mag > ctx.vanish_threshold * scale)
        throw AmbiguityError(std::string(what) + ": coefficient in the ambiguity band", 0);
    return false;
}

}  // namespace

BiOrder analytic_order(const BivariateSeries& s, const PrecisionContext& ctx) {
    Real scale = series_max_abs(s);
    BiOrder ord;
    if (scale == 0) {
        ord.infinite = true;
        return ord;
    }
    long first = -1, second = -1;
    for (long j = 0; j <= s.truncation; ++j) {
        long lo = -1, hi = -1;
        for (long l = 0; l < static_cast<long>(s.polys[j].size()); ++l) {
            if (significant(abs(s.polys[j][l]), scale, ctx, "analytic_order")) {
                if (lo < 0) lo = l;
                hi = l;
            }
        }
        if (lo < 0) continue;
        if (first < 0 || lo < first) first = lo;
        if (second < 0 || j - hi < second) second = j - hi;
    }
    if (first < 0) {
        ord.infinite = true;
        return ord;
    }
    ord.first = first;
    ord.second = second;
    return ord;
}

BiOrder bi_order(const TensorElement& t, const PrecisionContext& ctx) {
    Real scale = matrix_max_abs(t.coeffs);
    BiOrder ord;
    if (scale == 0) {
        ord.infinite = true;
        return ord;
    }
    long cmin = -1, dmin = -1;
    for (long c = 0; c <= t.p1 - 3; ++c)
        for (long d = 0; d <= t.p2 - 3; ++d)
            if (significant(abs(t.coeffs[c][d]), scale, ctx, "bi_order")) {
                if (cmin < 0 || c < cmin) cmin = c;
                if (dmin < 0 || d < dmin) dmin = d;
            }
    if (cmin < 0) {
        ord.infinite = true;
        return ord;
    }
    ord.first = cmin;
    ord.second = dmin;
    return ord;
}

std::vector<Complex> res_t(const TensorElement& t, long T, const PrecisionContext& ctx) {
    if (T < 0) throw std::invalid_argument("res_t requires T >= 0");
    auto rows1 = alpha_taylor_rows(t.p1, T, ctx);
    auto rows2 = alpha_taylor_rows(t.p2, T, ctx);
    std::vector<Complex> poly(T + 1);
    for (long c = 0; c <= t.p1 - 3; ++c)
        for (long d = 0; d <= t.p2 - 3; ++d) {
            const Complex& a = t.coeffs[c][d];
            if (a.is_zero()) continue;
            for (long l = 0; l <= T; ++l) poly[l] += a * rows1[c][l] * rows2[d][T - l];
        }
    return poly;
}

std::vector<Complex> residue_poly(const WeakFunction& omega_ztau, const WeakFunction& eta_z, long T) {
    std::vector<Complex> a = taylor_coeffs(omega_ztau, T + 1);
    std::vector<Complex> b = taylor_coeffs(eta_z, T + 1);
    std::vector<Complex> poly(T + 1);
    for (long l = 0; l <= T; ++l) poly[l] = a[l] * b[T - l];
    return poly;
}

std::vector<Complex> coeff_select(const std::vector<Complex>& poly, const std::set<long>& S, long T) {
    if (static_cast<long>(poly.size()) > T + 1)
        throw std::invalid_argument("coeff_select: polynomial degree exceeds T");
    std::vector<Complex> out;
    out.reserve(S.size());
    for (long l : S) {
        if (l < 0 || l > T) throw std::invalid_argument("coeff_select: index outside {0..T}");
        out.push_back(l < static_cast<long>(poly.size()) ? poly[l] : Complex());
    }
    return out;
}

KernelIndexSet kernel_index_set(long p1, long p2, long k, const std::set<long>& S) {
    if (k < 3) throw std::invalid_argument("kernel_index_set requires k >= 3");
    const long T = k - 2;
    for (long l : S)
        if (l < 0 || l > T) throw std::invalid_argument("kernel_index_set: S outside {0..k-2}");
    KernelIndexSet out;
    out.exact = T <= std::min(p1 - 3, p2 - 3);
    for (long m = 0; m <= p1 - 3; ++m)
        for (long n = 0; n <= p2 - 3; ++n) {
            if (((m + n) % 2) != ((k % 2 + 2) % 2)) continue;
            bool m_in = S.count(m) > 0;
            bool tn_in = S.count(T - n) > 0;
            bool keep;
            if (out.exact) {
                keep = !m_in || m != T - n;
            } else {
                keep = (!m_in && !tn_in) || (m_in && tn_in && m != T - n);
            }
            if (keep) out.pairs.emplace_back(m, n);
        }
    return out;
}

}  // namespace vanishforge
