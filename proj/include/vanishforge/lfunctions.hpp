#pragma once

#include <vector>

#include "vanishforge/eisenstein.hpp"
#include "vanishforge/special.hpp"

namespace vanishforge {

// L-series of the combination at any complex s != k, through the
// Dirichlet-product formula of the newform terms.
Complex l_value(const EisensteinCombination& f, const Complex& s, const PrecisionContext& ctx);

// Max |term| over the basis terms at the same point; the cancellation
// scale against which vanishing is measured.
Real l_value_scale(const EisensteinCombination& f, const Complex& s, const PrecisionContext& ctx);

// Completed value (2*pi)^{-s} Gamma(s) L(f; s); the q-powers of the
// combination are integral so the cusp width is 1.
Complex completed_lambda(const EisensteinCombination& f, const Complex& s,
                         const PrecisionContext& ctx);

// Independent route for the completed value: the Mellin integral of the
// truncated q-expansion, split at 1/sqrt(p1 p2) with the functional
// equation mapping the small-x segment to large x.
Complex lambda_mellin(const EisensteinCombination& f, const Complex& s, long m_terms,
                      const PrecisionContext& ctx);

struct PeriodPolynomial {
    long weight = 0;
    std::vector<Complex> coeffs;  // tau^0..tau^{k-2}
};

PeriodPolynomial period_polynomial(const EisensteinCombination& f, const PrecisionContext& ctx);

// Max coefficientwise relative residual between the critical-value side
// and the weak-pair residue side of the period identity for the single
// newform E_k(chi, psi; p2 tau).
Real eichler_identity_check(const DirichletCharacter& chi, const DirichletCharacter& psi, long k,
                            const PrecisionContext& ctx);

// True when L(f; s) vanishes at the critical integer s for character
// parity reasons in every term.
bool parity_trivial_zero_at(const EisensteinCombination& f, long s);

}  // namespace vanishforge
