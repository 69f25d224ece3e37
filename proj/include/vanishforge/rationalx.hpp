#pragma once

#include <gmpxx.h>

#include <vector>

#include "vanishforge/complexnum.hpp"

namespace vanishforge {

using Int = mpz_class;
using Rat = mpq_class;

Int binomial(long n, long k);
Int factorial_int(long n);

// Bernoulli number B_n (B_1 = -1/2 convention), exact, memoized.
Rat bernoulli(long n);

// Bernoulli polynomial B_n(x) evaluated at an exact rational point.
Rat bernoulli_poly(long n, const Rat& x);

// Exact Gaussian rational a + b*i.
struct GaussianRational {
    Rat re, im;
    GaussianRational() : re(0), im(0) {}
    GaussianRational(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
};

Real to_real(const Rat& q);
Real to_real(const Int& z);
Complex to_complex(const GaussianRational& g);

}  // namespace vanishforge
