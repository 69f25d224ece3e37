#include "vanishforge/weak.hpp"

#include <numeric>
#include <sstream>

#include "vanishforge/linalg.hpp"

namespace vanishforge {

WeakFunction make_weak(long level, std::vector<Complex> beta) {
    if (level < 3) throw std::invalid_argument("weak function level must be >= 3");
    if (static_cast<long>(beta.size()) != level - 1)
        throw std::invalid_argument("weak function needs exactly N-1 coefficients");
    return WeakFunction{level, std::move(beta)};
}

WeakFunction weak_from_character(const DirichletCharacter& chi) {
    std::vector<Complex> vals = chi.value_table();
    return WeakFunction{chi.modulus, std::vector<Complex>(vals.begin() + 1, vals.end())};
}

WeakFunction zero_weak(long level) {
    return WeakFunction{level, std::vector<Complex>(level - 1)};
}

Complex beta_sum(const WeakFunction& w) {
    Complex acc;
    for (const auto& b : w.beta) acc += b;
    return acc;
}

Real beta_norm(const WeakFunction& w) {
    Real acc = 0;
    for (const auto& b : w.beta) acc += norm_sq(b);
    return boost::multiprecision::sqrt(acc);
}

bool in_w0(const WeakFunction& w) {
    Real n = beta_norm(w);
    if (n == 0) return true;
    return abs(beta_sum(w)) <= pow2(-(static_cast<long>(working_precision_bits()) - kGuardBits - 8)) * n;
}

void require_w0(const WeakFunction& w) {
    if (!in_w0(w)) throw std::invalid_argument("weak function is not in W0: coefficients do not sum to zero");
}

WeakFunction reflect(const WeakFunction& w) {
    const long N = w.level;
    std::vector<Complex> b(N - 1);
    for (long r = 1; r < N; ++r) b[r - 1] = -w.beta[N - r - 1];
    return WeakFunction{N, std::move(b)};
}

int function_parity(const WeakFunction& w, const PrecisionContext& ctx) {
    WeakFunction r = reflect(w);
    Real n = beta_norm(w);
    if (n == 0) return +1;
    Real dplus = 0, dminus = 0;
    for (size_t i = 0; i < w.beta.size(); ++i) {
        dplus += norm_sq(r.beta[i] - w.beta[i]);
        dminus += norm_sq(r.beta[i] + w.beta[i]);
    }
    if (boost::multiprecision::sqrt(dplus) <= ctx.vanish_threshold * n) return +1;
    if (boost::multiprecision::sqrt(dminus) <= ctx.vanish_threshold * n) return -1;
    return 0;
}

bool is_new_of_level(const WeakFunction& w, const PrecisionContext& ctx) {
    Real n = beta_norm(w);
    if (n == 0) return false;
    for (long r = 1; r < w.level; ++r) {
        if (std::gcd(r, w.level) != 1) continue;
        if (abs(w.beta[r - 1]) > ctx.vanish_threshold * n) return true;
    }
    return false;
}

Complex evaluate_pole_sum(const WeakFunction& w, const Complex& z) {
    const long N = w.level;
    const unsigned base_bits = working_precision_bits();
    unsigned bump = 0;
    for (int attempt = 0; attempt < 4; ++attempt) {
        ScopedPrecision sp(base_bits + bump);
        Complex ez = e_at(z);
        std::vector<Complex> roots = roots_of_unity(N);
        Complex acc;
        Real max_term = 0;
        for (long r = 1; r < N; ++r) {
            if (w.beta[r - 1].is_zero()) continue;
            Complex denom = roots[r] - ez;
            if (abs(denom) < pow2(-(static_cast<long>(working_precision_bits()) - 8))) {
                std::ostringstream msg;
                msg << "pole hit at z = " << r << "/" << N << " (mod 1)";
                throw PoleError(msg.str());
            }
            Complex term = w.beta[r - 1] * ez / denom;
            acc += term;
            Real a = abs(term);
            if (a > max_term) max_term = a;
        }
        Real a = abs(acc);
        // rerun with more precision when cancellation ate into the guard bits
        if (max_term == 0 || a > max_term * pow2(-static_cast<long>(kGuardBits) / 2) ||
            attempt == 3) {
            return acc;
        }
        Real loss = (a == 0) ? Real(base_bits + bump)
                             : boost::multiprecision::log2(max_term / a);
        bump += static_cast<unsigned>(loss.convert_to<double>()) + kGuardBits;
    }
    throw std::logic_error("unreachable");
}

Complex evaluate(const WeakFunction& w, const Complex& z) {
    const long N = w.level;
    Complex zr = z;
    zr.re -= boost::multiprecision::round(zr.re);
    Real dist = abs(zr);
    if (dist < Real(1) / (2 * N)) {
        if (!in_w0(w)) {
            if (dist < pow2(-(static_cast<long>(working_precision_bits()) - 8)))
                throw PoleError("pole hit at z = 0 (mod 1)");
            return evaluate_pole_sum(w, z);
        }
        // Taylor path near the removable singularity
        Real eps = pow2(-static_cast<long>(working_precision_bits()) + 4);
        long count = 32;
        for (int attempt = 0; attempt < 6; ++attempt, count *= 2) {
            std::vector<Complex> t = taylor_coeffs(w, count);
            Complex acc;
            Complex zp(Real(1));
            Real tail = 0;
            for (long nu = 0; nu < count; ++nu) {
                Complex term = t[nu] * zp;
                acc += term;
                zp *= zr;
                if (nu == count - 1) tail = abs(term);
            }
            Real scale = abs(acc);
            if (scale == 0) scale = beta_norm(w);
            if (tail <= eps * scale || beta_norm(w) == 0) return acc;
        }
        throw std::runtime_error("evaluate: Taylor fallback did not converge");
    }
    return evaluate_pole_sum(w, z);
}

std::vector<Complex> taylor_coeffs(const WeakFunction& w, long count) {
    require_w0(w);
    if (count < 1) return {};
    const long N = w.level;
    std::vector<Complex> sums = cot_power_sums(w.beta, N, count);
    std::vector<Complex> out(count);
    Real pi_val = pi();
    Real pi_pow = 1;
    Complex minus_half_i(Real(0), Real(-1) / 2);
    for (long nu = 0; nu < count; ++nu) {
        Complex inner;
        for (long u = 0; u <= nu + 1; ++u) {
            GaussianRational d = delta_coeff_exact(nu + 1, u);
            if (d.re == 0 && d.im == 0) continue;
            inner += to_complex(d) * sums[u];
        }
        out[nu] = minus_half_i * Complex(pi_pow) * inner;
        pi_pow *= pi_val;
    }
    return out;
}

OrderResult vanishing_order(const WeakFunction& w, const PrecisionContext& ctx) {
    require_w0(w);
    const long N = w.level;
    Real bnorm = beta_norm(w);
    OrderResult res;
    if (bnorm == 0) {
        res.infinite = true;
        return res;
    }
    std::vector<Real> nodes = cot_nodes(N);
    Real nonzero_band = boost::multiprecision::sqrt(ctx.vanish_threshold);
    std::vector<Real> row(N - 1, Real(1));
    for (long u = 0; u <= N - 2; ++u) {
        Real row_norm = 0;
        for (const auto& e : row) row_norm += e * e;
        row_norm = boost::multiprecision::sqrt(row_norm);
        Complex s;
        for (long r = 0; r < N - 1; ++r) s += w.beta[r] * row[r];
        Real scale = bnorm * row_norm;
        Real mag = abs(s);
        if (mag > nonzero_band * scale) {
            res.order = u - 1;
            res.witness_u = u;
            res.witness_value = s;
            if (res.order > N - 3) {
                throw AmbiguityError("vanishing_order: first nonzero power sum appears beyond u = N-2", u);
            }
            if (u == 0) {
                // cannot happen for W0 input (sum of beta is zero), kept as guard
                throw AmbiguityError("vanishing_order: power sum u = 0 nonzero for W0 input", 0);
            }
            return res;
        }
        if (mag > ctx.vanish_threshold * scale) {
            std::ostringstream msg;
            msg << "vanishing_order: cot power sum u = " << u
                << " falls in the ambiguity band; raise the precision";
            throw AmbiguityError(msg.str(), u);
        }
        for (long r = 0; r < N - 1; ++r) row[r] *= nodes[r];
    }
    throw AmbiguityError(
        "vanishing_order: all power sums through u = N-2 vanish for a nonzero coefficient vector",
        N - 1);
}

CotangentMatrix CotangentMatrix::build(long N, long m) {
    if (N < 3 || m < 0) throw std::invalid_argument("CotangentMatrix requires N >= 3, m >= 0");
    CotangentMatrix cm;
    cm.level = N;
    cm.rows = m + 1;
    std::vector<Real> nodes = cot_nodes(N);
    cm.entries.assign(m + 1, std::vector<Real>(N - 1));
    std::vector<Real> pw(N - 1, Real(1));
    for (long i = 0; i <= m; ++i) {
        cm.entries[i] = pw;
        if (i < m)
            for (long r = 0; r < N - 1; ++r) pw[r] *= nodes[r];
    }
    return cm;
}

long CotangentMatrix::numerical_rank(const PrecisionContext& ctx) const {
    CMatrix a(rows);
    for (long i = 0; i < rows; ++i) {
        a[i].reserve(level - 1);
        for (const auto& e : entries[i]) a[i].emplace_back(e);
    }
    return vanishforge::numerical_rank(std::move(a), ctx.rank_threshold);
}

namespace {

// Divided-difference kernel vector: entries x_r^t / prod_{s != r}(x_r - x_s).
// Annihilates all cotangent power sums with u + t <= N - 3.
std::vector<Complex> divided_difference_vector(const std::vector<Real>& nodes, long t) {
    const long n = static_cast<long>(nodes.size());
    std::vector<Complex> v(n);
    for (long r = 0; r < n; ++r) {
        Real denom = 1;
        for (long s = 0; s < n; ++s) {
            if (s == r) continue;
            denom *= nodes[r] - nodes[s];
        }
        Real num = 1;
        for (long q = 0; q < t; ++q) num *= nodes[r];
        v[r] = Complex(num / denom);
    }
    return v;
}

}  // namespace

std::vector<WeakFunction> cotm_kernel(long N, long m, const PrecisionContext& ctx) {
    (void)ctx;
    if (N < 3 || m < 0) throw std::invalid_argument("cotm_kernel requires N >= 3, m >= 0");
    long dim = std::max<long>(0, N - m - 2);
    std::vector<WeakFunction> out;
    out.reserve(dim);
    std::vector<Real> nodes = cot_nodes(N);
    for (long t = 0; t < dim; ++t) {
        std::vector<Complex> v = divided_difference_vector(nodes, t);
        Complex lead = v[0];
        for (auto& e : v) e /= lead;
        out.push_back(WeakFunction{N, std::move(v)});
    }
    return out;
}

std::vector<WeakFunction> alpha_basis(long N, const PrecisionContext& ctx) {
    if (N < 3) throw std::invalid_argument("alpha_basis requires N >= 3");
    std::vector<Real> nodes = cot_nodes(N);
    std::vector<WeakFunction> alphas(N - 2);
    Real pi_val = pi();

    for (long j = 0; j <= N - 3; ++j) {
        long t = N - 3 - j;
        std::vector<Complex> v = divided_difference_vector(nodes, t);
        // project onto parity (-1)^j; the divided-difference vector already
        // carries it, the projection removes rounding asymmetry
        WeakFunction wf{N, v};
        WeakFunction wr = reflect(wf);
        for (long r = 0; r < N - 1; ++r) {
            Complex sym = (j % 2 == 0) ? wr.beta[r] : -wr.beta[r];
            wf.beta[r] = (wf.beta[r] + sym) * Complex(Real(1) / 2);
        }
        // leading Taylor coefficient at z^j
        std::vector<Complex> sums = cot_power_sums(wf.beta, N, j + 1);
        Real pi_pow = 1;
        for (long q = 0; q < j; ++q) pi_pow *= pi_val;
        Complex lead = Complex(Real(0), Real(-1) / 2) * Complex(pi_pow) *
                       to_complex(delta_coeff_exact(j + 1, j + 1)) * sums[j + 1];
        if (abs(lead) < ctx.vanish_threshold)
            throw AmbiguityError("alpha_basis: leading coefficient below vanish threshold", j);
        for (auto& e : wf.beta) e /= lead;
        alphas[j] = std::move(wf);
    }

    // clear coefficients j+1..N-3 against the already-final higher vectors
    std::vector<std::vector<Complex>> taylors(N - 2);
    for (long j = N - 3; j >= 0; --j) {
        std::vector<Complex> t = taylor_coeffs(alphas[j], N - 2);
        for (long j2 = j + 2; j2 <= N - 3; j2 += 2) {
            Complex c = t[j2];
            if (c.is_zero()) continue;
            for (long r = 0; r < N - 1; ++r) alphas[j].beta[r] -= c * alphas[j2].beta[r];
            for (long i = 0; i < N - 2; ++i) t[i] -= c * taylors[j2][i];
        }
        taylors[j] = std::move(t);
    }
    return alphas;
}

WeakFunction weak_fourier_transform(const WeakFunction& w, DftDirection direction) {
    require_w0(w);
    const long N = w.level;
    std::vector<Complex> full(N);
    for (long r = 1; r < N; ++r) full[r] = w.beta[r - 1];
    std::vector<Complex> transformed = dft(full, direction);
    return WeakFunction{N, std::vector<Complex>(transformed.begin() + 1, transformed.end())};
}

}  // namespace vanishforge
