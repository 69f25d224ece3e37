#include "vanishforge/cotangent.hpp"

#include <mutex>
#include <stdexcept>

namespace vanishforge {

Int stirling_star(long n, long m) {
    if (n < 0 || m < 0 || m > n) throw std::invalid_argument("stirling_star requires 0 <= m <= n");
    Int acc(0);
    for (long j = 0; j <= m; ++j) {
        Int p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(m - j), static_cast<unsigned long>(n));
        Int term = binomial(m, j) * p;
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

namespace {

GaussianRational delta_compute(long nu, long u) {
    // delta_nu(u) = i^{nu+u}/(nu-1)! *
    //   sum_{l=u-1}^{nu-1} (-1)^{nu+l-u} 2^{nu-1-l} S*(nu-1,l) (C(l,u) - C(l,u-1))
    Rat acc(0);
    for (long l = std::max<long>(0, u - 1); l <= nu - 1; ++l) {
        Int two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(nu - 1 - l));
        Int term = two_pow * stirling_star(nu - 1, l) * (binomial(l, u) - binomial(l, u - 1));
        if ((nu + l - u) % 2 == 0)
            acc += Rat(term);
        else
            acc -= Rat(term);
    }
    acc /= Rat(factorial_int(nu - 1));
    switch (((nu + u) % 4 + 4) % 4) {
        case 0: return GaussianRational(acc, Rat(0));
        case 1: return GaussianRational(Rat(0), acc);
        case 2: return GaussianRational(-acc, Rat(0));
        default: return GaussianRational(Rat(0), -acc);
    }
}

std::mutex delta_mutex;
// delta_cache[nu-1][u], grows only
std::vector<std::vector<GaussianRational>> delta_cache;

}  // namespace

GaussianRational delta_coeff_exact(long nu, long u) {
    if (nu < 1 || u < 0 || u > nu) throw std::invalid_argument("delta_coeff requires 1 <= nu, 0 <= u <= nu");
    std::lock_guard<std::mutex> lock(delta_mutex);
    while (static_cast<long>(delta_cache.size()) < nu) {
        long n = static_cast<long>(delta_cache.size()) + 1;
        std::vector<GaussianRational> row;
        row.reserve(n + 1);
        for (long uu = 0; uu <= n; ++uu) row.push_back(delta_compute(n, uu));
        delta_cache.push_back(std::move(row));
    }
    return delta_cache[nu - 1][u];
}

Real delta_coeff(long nu, long u) { return to_real(delta_coeff_exact(nu, u).re); }

DeltaTable delta_table(long max_nu) {
    if (max_nu < 1) throw std::invalid_argument("delta_table requires max_nu >= 1");
    DeltaTable t;
    t.max_nu = max_nu;
    t.entries.resize(max_nu);
    for (long nu = 1; nu <= max_nu; ++nu) {
        t.entries[nu - 1].reserve(nu + 1);
        for (long u = 0; u <= nu; ++u) t.entries[nu - 1].push_back(delta_coeff(nu, u));
    }
    return t;
}

std::vector<Real> cot_nodes(long N) {
    std::vector<Real> nodes;
    nodes.reserve(N - 1);
    Real p = pi();
    for (long r = 1; r < N; ++r) nodes.push_back(cot(p * r / N));
    return nodes;
}

Complex cot_power_sum(const std::vector<Complex>& beta, long N, long u) {
    if (N < 3) throw std::invalid_argument("cot_power_sum requires N >= 3");
    if (u < 0) throw std::invalid_argument("cot_power_sum requires u >= 0");
    if (static_cast<long>(beta.size()) != N - 1)
        throw std::invalid_argument("cot_power_sum: beta must have length N-1");
    std::vector<Real> nodes = cot_nodes(N);
    Complex acc;
    for (long r = 0; r < N - 1; ++r) {
        Real p = 1;
        for (long t = 0; t < u; ++t) p *= nodes[r];
        acc += beta[r] * p;
    }
    return acc;
}

std::vector<Complex> cot_power_sums(const std::vector<Complex>& beta, long N, long u_max) {
    if (N < 3) throw std::invalid_argument("cot_power_sums requires N >= 3");
    if (static_cast<long>(beta.size()) != N - 1)
        throw std::invalid_argument("cot_power_sums: beta must have length N-1");
    std::vector<Real> nodes = cot_nodes(N);
    std::vector<Real> powers(N - 1, Real(1));
    std::vector<Complex> out(u_max + 1);
    for (long u = 0; u <= u_max; ++u) {
        Complex acc;
        for (long r = 0; r < N - 1; ++r) acc += beta[r] * powers[r];
        out[u] = acc;
        if (u < u_max)
            for (long r = 0; r < N - 1; ++r) powers[r] *= nodes[r];
    }
    return out;
}

Rat berndt_yeap_closed_form(long n, long N) {
    if (n < 1 || N < 1) throw std::invalid_argument("berndt_yeap_closed_form requires n, N >= 1");
    // T(x) = sum_{j>=0} B_{2j} x^j / (2j)!, truncated at degree n;
    // the inner composition sum over (j_1..j_{2n}) is [x^{n-j0}] T^{2n}.
    std::vector<Rat> t(n + 1);
    for (long j = 0; j <= n; ++j) t[j] = bernoulli(2 * j) / Rat(factorial_int(2 * j));

    auto mul_trunc = [n](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> c(n + 1, Rat(0));
        for (long i = 0; i <= n; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };

    std::vector<Rat> acc(n + 1, Rat(0));
    acc[0] = 1;
    std::vector<Rat> base = t;
    long e = 2 * n;
    while (e > 0) {
        if (e & 1) acc = mul_trunc(acc, base);
        base = mul_trunc(base, base);
        e >>= 1;
    }

    Rat sum(0);
    Int n2;
    for (long j0 = 0; j0 <= n; ++j0) {
        Int npow;
        mpz_ui_pow_ui(npow.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(2 * j0));
        sum += t[j0] * acc[n - j0] * Rat(npow);
    }
    Int two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(2 * n));
    Rat result = Rat(N) - Rat(two_pow) * sum;
    if (n % 2 == 1) result = -result;
    return result;
}

}  // namespace vanishforge
