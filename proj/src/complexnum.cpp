#include "vanishforge/complexnum.hpp"

namespace vanishforge {

Complex& Complex::operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
}

Complex& Complex::operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
}

Complex operator*(const Real& a, Complex b) {
    b.re *= a;
    b.im *= a;
    return b;
}

Complex operator*(Complex a, const Real& b) {
    a.re *= b;
    a.im *= b;
    return a;
}

Real abs(const Complex& z) {
    if (z.im == 0) return boost::multiprecision::abs(z.re);
    if (z.re == 0) return boost::multiprecision::abs(z.im);
    return boost::multiprecision::sqrt(z.re * z.re + z.im * z.im);
}

Real norm_sq(const Complex& z) { return z.re * z.re + z.im * z.im; }

Complex exp(const Complex& z) {
    Real m = boost::multiprecision::exp(z.re);
    return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}

Complex log(const Complex& z) {
    return Complex(boost::multiprecision::log(abs(z)),
                   boost::multiprecision::atan2(z.im, z.re));
}

Complex sqrt(const Complex& z) {
    if (z.im == 0 && z.re >= 0) return Complex(boost::multiprecision::sqrt(z.re));
    Real r = abs(z);
    // principal branch: re >= 0
    Real u = boost::multiprecision::sqrt((r + z.re) / 2);
    Real v = boost::multiprecision::sqrt((r - z.re) / 2);
    if (z.im < 0) v = -v;
    return Complex(u, v);
}

Complex pow(const Complex& z, const Complex& w) {
    if (z.is_zero()) return Complex(Real(0));
    return exp(w * log(z));
}

Complex ipow(const Complex& z, long n) {
    if (n < 0) return Complex(Real(1)) / ipow(z, -n);
    Complex acc(Real(1));
    Complex base = z;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

Complex polar(const Real& r, const Real& theta) {
    return Complex(r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta));
}

Real pi() {
    Real r = 0;
    mpfr_const_pi(r.backend().data(), MPFR_RNDN);
    return r;
}

Real cot(const Real& x) {
    return boost::multiprecision::cos(x) / boost::multiprecision::sin(x);
}

Complex unit_i() { return Complex(Real(0), Real(1)); }

Complex e_at(const Complex& z) {
    Real two_pi = 2 * pi();
    return exp(Complex(-two_pi * z.im, two_pi * z.re));
}

std::vector<Complex> roots_of_unity(long n) {
    std::vector<Complex> out;
    out.reserve(n);
    Real two_pi = 2 * pi();
    for (long j = 0; j < n; ++j) {
        Real theta = two_pi * j / n;
        out.push_back(polar(Real(1), theta));
    }
    return out;
}

}  // namespace vanishforge
