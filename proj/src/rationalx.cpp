#include "vanishforge/rationalx.hpp"

#include <mutex>
#include <stdexcept>

namespace vanishforge {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Int factorial_int(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

namespace {
std::mutex bernoulli_mutex;
std::vector<Rat> bernoulli_table;  // grows only, guarded by bernoulli_mutex

void extend_bernoulli(long n) {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
    if (bernoulli_table.empty()) {
        bernoulli_table.emplace_back(1);
    }
    while (static_cast<long>(bernoulli_table.size()) <= n) {
        long m = static_cast<long>(bernoulli_table.size());
        Rat acc(0);
        for (long k = 0; k < m; ++k) {
            acc += Rat(binomial(m + 1, k)) * bernoulli_table[k];
        }
        bernoulli_table.push_back(-acc / Rat(m + 1));
    }
}
}  // namespace

Rat bernoulli(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli index negative");
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    extend_bernoulli(n);
    return bernoulli_table[n];
}

Rat bernoulli_poly(long n, const Rat& x) {
    // B_n(x) = sum_k C(n,k) B_k x^{n-k}
    Rat acc(0);
    Rat xp(1);
    std::vector<Rat> bs(n + 1);
    {
        std::lock_guard<std::mutex> lock(bernoulli_mutex);
        extend_bernoulli(n);
        for (long k = 0; k <= n; ++k) bs[k] = bernoulli_table[k];
    }
    for (long k = n; k >= 0; --k) {
        acc += Rat(binomial(n, k)) * bs[k] * xp;
        xp *= x;
    }
    return acc;
}

Real to_real(const Rat& q) {
    Real r = 0;
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real to_real(const Int& z) {
    Real r = 0;
    mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Complex to_complex(const GaussianRational& g) { return Complex(to_real(g.re), to_real(g.im)); }

}  // namespace vanishforge
