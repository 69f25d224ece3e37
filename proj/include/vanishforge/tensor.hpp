#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "vanishforge/linalg.hpp"
#include "vanishforge/weak.hpp"

namespace vanishforge {

// Element of W0_{p1} (x) W0_{p2} in the order-graded basis: coeffs[c][d]
// multiplies alpha_c^{(p1)} (x) alpha_d^{(p2)} with 0 <= c <= p1-3,
// 0 <= d <= p2-3.
struct TensorElement {
    long p1 = 0, p2 = 0;
    CMatrix coeffs;
    std::optional<int> weight_parity;  // when set: coeffs vanish off c+d = k (mod 2)
};

TensorElement make_tensor(long p1, long p2, CMatrix coeffs,
                          std::optional<int> weight_parity = std::nullopt);
TensorElement elementary_tensor(long p1, long p2, long c, long d);

// Truncated realization sum_j P_j(tau) z^j with deg P_j <= j.
struct BivariateSeries {
    long truncation = 0;
    std::vector<std::vector<Complex>> polys;  // polys[j][l] = coeff of tau^l in P_j
};

// Componentwise order of a tensor or series; infinite for zero.
struct BiOrder {
    bool infinite = false;
    long first = 0, second = 0;
    bool operator==(const BiOrder&) const = default;
};

// (omega (x) eta) -> eta(z) omega(z tau), expanded through z^T by Cauchy
// convolution of the basis Taylor coefficients.
BivariateSeries xi_map(const TensorElement& t, long T, const PrecisionContext& ctx);

BivariateSeries multiply(const BivariateSeries& a, const BivariateSeries& b, long T);

// Order of the truncated series: (min low tau-degree of P_j,
// min_j j - deg P_j), with two-band thresholding.
BiOrder analytic_order(const BivariateSeries& s, const PrecisionContext& ctx);

// Componentwise minima of the significant basis coefficients.
BiOrder bi_order(const TensorElement& t, const PrecisionContext& ctx);

// res_{z=0}( z^{-(T+1)} eta(z) omega(z tau) ): the polynomial P_T(tau).
std::vector<Complex> res_t(const TensorElement& t, long T, const PrecisionContext& ctx);

// Same residue polynomial for a single weak pair: coefficients of tau^l
// equal a^{omega}_l a^{eta}_{T-l} over the Taylor coefficients.
std::vector<Complex> residue_poly(const WeakFunction& omega_ztau, const WeakFunction& eta_z, long T);

// Coefficient selection (coeff of tau^l)_{l in S} in ascending l.
std::vector<Complex> coeff_select(const std::vector<Complex>& poly, const std::set<long>& S, long T);

// Index pairs spanning the kernel of Coeff_{S,T} o Res_T at weight k
// (T = k-2).  exact is true when T <= min{p1-3, p2-3}; otherwise the set
// is only guaranteed to be contained in the kernel.
struct KernelIndexSet {
    bool exact = false;
    std::vector<std::pair<long, long>> pairs;
};

KernelIndexSet kernel_index_set(long p1, long p2, long k, const std::set<long>& S);

}  // namespace vanishforge
