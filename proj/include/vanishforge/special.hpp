#pragma once

#include "vanishforge/complexnum.hpp"
#include "vanishforge/rationalx.hpp"

namespace vanishforge {

// Gamma function for complex arguments at the ambient precision.
// Throws std::domain_error at the poles z = 0, -1, -2, ...
Complex gamma(const Complex& z);

bool is_gamma_pole(const Complex& z);

// Hurwitz zeta zeta(s, a) for rational a in (0,1] and complex s != 1,
// by Euler-Maclaurin with adaptive shift.
Complex hurwitz_zeta(const Complex& s, const Rat& a);

// Digamma at a rational point in (0,1), asymptotic series with shift.
Real digamma_rational(const Rat& a);

// Upper incomplete gamma Gamma(s, x) for real x > 0.  Series route for
// x below Re(s)+1, Legendre continued fraction otherwise.
Complex upper_incomplete_gamma(const Complex& s, const Real& x);

}  // namespace vanishforge
