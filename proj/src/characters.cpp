#include "vanishforge/characters.hpp"

#include <stdexcept>

#include "vanishforge/special.hpp"

namespace vanishforge {

bool is_odd_prime(long n) {
    if (n < 3 || n % 2 == 0) return false;
    for (long d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

long smallest_primitive_root(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("primitive root requires an odd prime");
    long phi = p - 1;
    std::vector<long> prime_factors;
    long m = phi;
    for (long d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
            m /= d;
        }
    if (m > 1) prime_factors.push_back(m);

    auto pow_mod = [p](long base, long e) {
        long r = 1, b = base % p;
        while (e > 0) {
            if (e & 1) r = (r * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        return r;
    };
    for (long g = 2; g < p; ++g) {
        bool ok = true;
        for (long q : prime_factors)
            if (pow_mod(g, phi / q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

namespace {
// discrete logs to the smallest primitive root: dlog[g^e mod p] = e
std::vector<long> dlog_table(long p) {
    long g = smallest_primitive_root(p);
    std::vector<long> dlog(p, -1);
    long acc = 1;
    for (long e = 0; e < p - 1; ++e) {
        dlog[acc] = e;
        acc = (acc * g) % p;
    }
    return dlog;
}
}  // namespace

DirichletCharacter DirichletCharacter::conjugate() const {
    DirichletCharacter c;
    c.modulus = modulus;
    c.index = (modulus - 1 - index) % (modulus - 1);
    return c;
}

long DirichletCharacter::exponent_at(long m) const {
    long r = m % modulus;
    if (r < 0) r += modulus;
    if (r == 0) return -1;
    static thread_local long cached_p = 0;
    static thread_local std::vector<long> cached_dlog;
    if (cached_p != modulus) {
        cached_dlog = dlog_table(modulus);
        cached_p = modulus;
    }
    return (index * cached_dlog[r]) % (modulus - 1);
}

Complex DirichletCharacter::value_at(long m) const {
    long e = exponent_at(m);
    if (e < 0) return Complex();
    Real theta = 2 * pi() * e / (modulus - 1);
    return polar(Real(1), theta);
}

std::vector<Complex> DirichletCharacter::value_table() const {
    std::vector<Complex> roots = roots_of_unity(modulus - 1);
    std::vector<Complex> out(modulus);
    for (long r = 1; r < modulus; ++r) {
        long e = exponent_at(r);
        out[r] = roots[e];
    }
    return out;
}

std::vector<DirichletCharacter> enumerate_characters(long p) {
    if (!is_odd_prime(p)) throw std::invalid_argument("enumerate_characters requires an odd prime");
    std::vector<DirichletCharacter> out;
    out.reserve(p - 2);
    for (long j = 1; j <= p - 2; ++j) out.push_back(DirichletCharacter{p, j});
    return out;
}

std::vector<Complex> dft(const std::vector<Complex>& values, DftDirection direction) {
    const long n = static_cast<long>(values.size());
    if (n < 1) throw std::invalid_argument("dft: empty input");
    std::vector<Complex> roots = roots_of_unity(n);
    std::vector<Complex> out(n);
    for (long j = 0; j < n; ++j) {
        Complex acc;
        for (long m = 0; m < n; ++m) {
            long e = (j * m) % n;
            Complex w = (direction == DftDirection::Forward) ? conj(roots[e]) : roots[e];
            acc += values[m] * w;
        }
        if (direction == DftDirection::Inverse) acc = acc * (Real(1) / n);
        out[j] = acc;
    }
    return out;
}

Complex gauss_sum(const DirichletCharacter& chi) {
    if (chi.is_principal()) throw std::invalid_argument("gauss_sum: principal character");
    const long p = chi.modulus;
    std::vector<Complex> chi_vals = chi.value_table();
    std::vector<Complex> roots = roots_of_unity(p);
    Complex acc;
    for (long r = 1; r < p; ++r) acc += chi_vals[r] * roots[r];
    return acc;
}

Complex dirichlet_l(const DirichletCharacter& chi, const Complex& s, const PrecisionContext& ctx) {
    if (chi.is_principal()) throw std::invalid_argument("dirichlet_l: principal character");
    (void)ctx;
    const long p = chi.modulus;
    std::vector<Complex> chi_vals = chi.value_table();

    if (s.im == 0 && s.re == 1) {
        // L(chi, 1) = -(1/p) sum_a chi(a) psi(a/p)
        Complex acc;
        for (long a = 1; a < p; ++a) acc += chi_vals[a] * Complex(digamma_rational(Rat(a, p)));
        return acc * Complex(Real(-1) / p);
    }

    Complex acc;
    for (long a = 1; a < p; ++a) acc += chi_vals[a] * hurwitz_zeta(s, Rat(a, p));
    Complex p_pow = exp(-s * Complex(boost::multiprecision::log(Real(p))));
    return p_pow * acc;
}

Complex dirichlet_l_bernoulli(const DirichletCharacter& chi, long n) {
    if (chi.is_principal()) throw std::invalid_argument("dirichlet_l_bernoulli: principal character");
    if (n < 1) throw std::invalid_argument("dirichlet_l_bernoulli: n must be >= 1");
    const long p = chi.modulus;
    std::vector<Complex> chi_vals = chi.value_table();
    // B_{n,chi} = p^{n-1} sum_a chi(a) B_n(a/p)
    Complex acc;
    for (long a = 1; a < p; ++a) acc += chi_vals[a] * Complex(to_real(bernoulli_poly(n, Rat(a, p))));
    Int pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n - 1));
    Complex b = acc * Complex(to_real(pk));
    return -b * Complex(Real(1) / n);
}

bool parity_trivial_zero(const DirichletCharacter& chi, long s) {
    if (s > 0) return false;
    long m = -s;  // L(chi, -m), trivial zero when m matches the parity of chi
    if (chi.parity() == +1) return m % 2 == 0;
    return m % 2 == 1;
}

}  // namespace vanishforge
