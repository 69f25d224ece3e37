#include "vanishforge/special.hpp"

#include <stdexcept>

namespace vanishforge {

namespace {

unsigned ambient_bits() { return working_precision_bits(); }

Real target_eps() { return pow2(-static_cast<long>(ambient_bits()) + 4); }

bool near_integer(const Real& x, Real* integer_part) {
    Real r = boost::multiprecision::round(x);
    if (boost::multiprecision::abs(x - r) < pow2(-static_cast<long>(ambient_bits()) + 8)) {
        if (integer_part) *integer_part = r;
        return true;
    }
    return false;
}

// log Gamma by the Stirling series, valid once Re(w) is large enough for
// the ambient precision.
Complex log_gamma_stirling(const Complex& w) {
    Complex lw = log(w);
    Complex acc = (w - Complex(Real(1) / 2)) * lw - w;
    acc += Complex(boost::multiprecision::log(2 * pi()) / 2);
    Complex w2 = w * w;
    Complex wpow = w;  // w^{2j-1}
    Real eps = target_eps();
    for (long j = 1; j < 10000; ++j) {
        Rat c = bernoulli(2 * j) / (Rat(2 * j) * Rat(2 * j - 1));
        Complex term = Complex(to_real(c)) / wpow;
        acc += term;
        if (abs(term) < eps * abs(acc)) return acc;
        wpow *= w2;
    }
    throw std::runtime_error("log_gamma_stirling: series did not converge");
}

}  // namespace

bool is_gamma_pole(const Complex& z) {
    if (boost::multiprecision::abs(z.im) > pow2(-static_cast<long>(ambient_bits()) + 8)) return false;
    Real n;
    return near_integer(z.re, &n) && n <= 0;
}

Complex gamma(const Complex& z) {
    if (is_gamma_pole(z)) throw std::domain_error("gamma pole at nonpositive integer");
    // exact at positive integers
    Real n;
    if (z.im == 0 && near_integer(z.re, &n) && n > 0 && n < 1000) {
        return Complex(to_real(factorial_int(static_cast<long>(n) - 1)));
    }
    if (z.re < Real(1) / 2) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        Complex s = exp(Complex(Real(0), pi()) * z);
        Complex sin_pi_z = (s - Complex(Real(1)) / s) / Complex(Real(0), Real(2));
        return Complex(pi()) / (sin_pi_z * gamma(Complex(Real(1)) - z));
    }
    long shift_to = static_cast<long>(0.13 * ambient_bits()) + 8;
    long n_shift = 0;
    if (z.re < shift_to) n_shift = static_cast<long>(std::ceil((shift_to - z.re).convert_to<double>()));
    Complex w = z + Complex(Real(n_shift));
    Complex g = exp(log_gamma_stirling(w));
    for (long i = n_shift - 1; i >= 0; --i) g /= (z + Complex(Real(i)));
    return g;
}

Complex hurwitz_zeta(const Complex& s, const Rat& a) {
    if (a <= 0 || a > 1) throw std::invalid_argument("hurwitz_zeta: a must be in (0,1]");
    Real sd = abs(s);
    if (near_integer(s.re, nullptr) && s.re == 1 && s.im == 0)
        throw std::domain_error("hurwitz_zeta pole at s = 1");

    unsigned wp = ambient_bits();
    long M = std::max<long>(wp / 2, static_cast<long>(sd.convert_to<double>()) + 8);
    Real eps = target_eps();
    Real ar = to_real(a);

    for (int attempt = 0; attempt < 4; ++attempt, M *= 2) {
        Complex acc(Real(0));
        for (long nterm = 0; nterm < M; ++nterm) {
            acc += exp(-s * Complex(boost::multiprecision::log(nterm + ar)));
        }
        Real base = M + ar;
        Complex lb(boost::multiprecision::log(base));
        Complex base_1ms = exp((Complex(Real(1)) - s) * lb);  // base^{1-s}
        acc += base_1ms / (s - Complex(Real(1)));
        Complex base_ms = base_1ms / Complex(base);  // base^{-s}
        acc += base_ms / Complex(Real(2));

        // correction terms: B_{2j}/(2j)! * (s)_{2j-1} * base^{-s-2j+1}
        Complex poch = s;                    // (s)_{1}
        Complex bpow = base_ms * Complex(1 / base);  // base^{-s-1}
        bool converged = false;
        Complex prev_term;
        for (long j = 1; j < 4 * static_cast<long>(wp); ++j) {
            Rat c = bernoulli(2 * j) / Rat(factorial_int(2 * j));
            Complex term = Complex(to_real(c)) * poch * bpow;
            acc += term;
            Real tsz = abs(term);
            if (tsz < eps * abs(acc)) {
                converged = true;
                break;
            }
            if (j > 2 && tsz > abs(prev_term) * 4) break;  // diverging: enlarge M
            prev_term = term;
            poch *= (s + Complex(Real(2 * j - 1))) * (s + Complex(Real(2 * j)));
            bpow = bpow * Complex(1 / base) * Complex(1 / base);
        }
        if (converged) return acc;
    }
    throw std::runtime_error("hurwitz_zeta: Euler-Maclaurin did not converge");
}

Real digamma_rational(const Rat& a) {
    if (a <= 0 || a > 1) throw std::invalid_argument("digamma_rational: a must be in (0,1]");
    unsigned wp = ambient_bits();
    long M = wp / 2 + 8;
    Real eps = target_eps();
    Real ar = to_real(a);

    Real recip = 0;
    for (long i = 0; i < M; ++i) recip += 1 / (ar + i);
    Real y = ar + M;
    Real acc = boost::multiprecision::log(y) - 1 / (2 * y) - recip;
    Real y2 = y * y;
    Real ypow = y2;
    for (long j = 1; j < 4 * static_cast<long>(wp); ++j) {
        Rat c = bernoulli(2 * j) / Rat(2 * j);
        Real term = to_real(c) / ypow;
        acc -= term;
        if (boost::multiprecision::abs(term) < eps * boost::multiprecision::abs(acc)) return acc;
        ypow *= y2;
    }
    throw std::runtime_error("digamma_rational: series did not converge");
}

Complex upper_incomplete_gamma(const Complex& s, const Real& x) {
    if (x <= 0) throw std::invalid_argument("upper_incomplete_gamma: x must be positive");
    Real eps = target_eps();
    Complex xs_emx = exp(s * Complex(boost::multiprecision::log(x)) - Complex(x));

    if (x < s.re + 1) {
        if (s.re <= 0) throw std::domain_error("upper_incomplete_gamma: series route needs Re(s) > 0");
        // gamma(s,x) = x^s e^{-x} sum_n x^n / (s (s+1) ... (s+n))
        Complex denom = s;
        Complex term = Complex(Real(1)) / denom;
        Complex acc = term;
        Real xp = 1;
        for (long n = 1; n < 100000; ++n) {
            xp *= x;
            denom *= (s + Complex(Real(n)));
            term = Complex(xp) / denom;
            acc += term;
            if (abs(term) < eps * abs(acc)) break;
        }
        return gamma(s) - xs_emx * acc;
    }

    // Legendre continued fraction by modified Lentz
    Real tiny = pow2(-static_cast<long>(ambient_bits()) * 4);
    Complex b = Complex(x) + Complex(Real(1)) - s;
    Complex c = Complex(Real(1) / tiny);
    Complex d = Complex(Real(1)) / b;
    Complex h = d;
    for (long i = 1; i < 100000; ++i) {
        Complex an = Complex(Real(-i)) * (Complex(Real(i)) - s);
        b += Complex(Real(2));
        d = an * d + b;
        if (abs(d) < tiny) d = Complex(tiny);
        c = b + an / c;
        if (abs(c) < tiny) c = Complex(tiny);
        d = Complex(Real(1)) / d;
        Complex delta = d * c;
        h *= delta;
        if (abs(delta - Complex(Real(1))) < eps) break;
    }
    return xs_emx * h;
}

}  // namespace vanishforge
