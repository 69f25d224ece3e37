#pragma once

#include <utility>
#include <vector>

#include "vanishforge/precision.hpp"

namespace vanishforge {

// Complex number over the ambient-precision mpfr real type.  All branch
// cuts (log, sqrt, non-integer pow) follow the principal convention.
struct Complex {
    Real re, im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {}
    Complex(Real&& r) : re(std::move(r)), im(0) {}
    Complex(const Real& r, const Real& i) : re(r), im(i) {}
    Complex(long r) : re(r), im(0) {}
    Complex(int r) : re(r), im(0) {}
    Complex(double r) : re(r), im(0) {}
    Complex(long r, long i) : re(r), im(i) {}

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex operator-() const { return Complex(-re, -im); }
    bool is_zero() const { return re == 0 && im == 0; }
};

inline Complex operator+(Complex a, const Complex& b) { return a += b; }
inline Complex operator-(Complex a, const Complex& b) { return a -= b; }
inline Complex operator*(Complex a, const Complex& b) { return a *= b; }
inline Complex operator/(Complex a, const Complex& b) { return a /= b; }
inline bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

Complex operator*(const Real& a, Complex b);
Complex operator*(Complex a, const Real& b);

Real abs(const Complex& z);
Real norm_sq(const Complex& z);
inline Complex conj(const Complex& z) { return Complex(z.re, -z.im); }

Complex exp(const Complex& z);
Complex log(const Complex& z);
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, const Complex& w);
Complex ipow(const Complex& z, long n);  // exact integer power by squaring
Complex polar(const Real& r, const Real& theta);

Real pi();
Real cot(const Real& x);
Complex unit_i();

// e(z) = exp(2*pi*i*z)
Complex e_at(const Complex& z);

std::vector<Complex> roots_of_unity(long n);  // e(j/n), j = 0..n-1

}  // namespace vanishforge
