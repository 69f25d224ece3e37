#pragma once

#include <vector>

#include "vanishforge/complexnum.hpp"
#include "vanishforge/rationalx.hpp"

namespace vanishforge {

// S*(n,m) = m! {n over m} = sum_j (-1)^j C(m,j) (m-j)^n, exact.
Int stirling_star(long n, long m);

// Taylor-coefficient constant delta_nu(u), exact Gaussian rational.
// Entries with nu+u even are purely real; the lone imaginary entry is
// (nu,u) = (1,0), which only ever multiplies the vanishing 0-th power sum.
GaussianRational delta_coeff_exact(long nu, long u);

// Real value of delta_nu(u) at the ambient precision.
Real delta_coeff(long nu, long u);

struct DeltaTable {
    long max_nu = 0;
    // entries[nu-1][u] = delta_nu(u), 1 <= nu <= max_nu, 0 <= u <= nu
    std::vector<std::vector<Real>> entries;
};

DeltaTable delta_table(long max_nu);

// cot(pi r / N) for r = 1..N-1
std::vector<Real> cot_nodes(long N);

// sum_{r=1}^{N-1} beta(r) cot^u(pi r / N); beta[0] corresponds to r = 1.
Complex cot_power_sum(const std::vector<Complex>& beta, long N, long u);

// All power sums for u = 0..u_max in one pass.
std::vector<Complex> cot_power_sums(const std::vector<Complex>& beta, long N, long u_max);

// Closed form for sum_j cot^{2n}(pi j / N), exact in the Bernoulli numbers.
Rat berndt_yeap_closed_form(long n, long N);

}  // namespace vanishforge
