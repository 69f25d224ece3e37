#pragma once

#include <string>
#include <vector>

#include "vanishforge/linalg.hpp"
#include "vanishforge/tensor.hpp"
#include "vanishforge/weak.hpp"

namespace vanishforge {

// Truncated Fourier expansion sum_m c_m q^{m/scale}; c_0..c_M stored.
struct QExpansion {
    long weight = 0;
    long scale = 1;
    std::vector<Complex> coeffs;
    std::string provenance;
};

struct EisTerm {
    DirichletCharacter chi;  // mod p1
    DirichletCharacter psi;  // mod p2
    Complex coeff;
};

// Complex-linear combination sum c_{chi,psi} E_k(chi, psi; p2 tau).
struct EisensteinCombination {
    long weight = 0;
    long p1 = 0, p2 = 0;
    std::vector<EisTerm> terms;
};

// Drops terms below vanish_threshold * max |coeff|, orders by index pair.
EisensteinCombination normalize_terms(EisensteinCombination f, const PrecisionContext& ctx);

// q-expansion of E_k(chi, psi; tau) in q^{m/N_psi}; the d-sum carries the
// discrete Fourier transform of psi evaluated at -d.
QExpansion eisenstein_q_expansion(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                  long k, long m_terms, const PrecisionContext& ctx);

// q-expansion of the pairing of two weak functions at weight k, level of
// eta sets the exponent scale.
QExpansion theta_q_expansion(const WeakFunction& omega, const WeakFunction& eta, long k,
                             long m_terms, const PrecisionContext& ctx);

// Constant lambda with E_k(chi, psi; tau) = lambda * theta_k(omega_{conj chi} (x) omega_{conj psi}; tau).
Complex weak_eisenstein_constant(const DirichletCharacter& chi, const DirichletCharacter& psi, long k);

// Pair given by coefficients over the (omega_chi (x) omega_psi) basis
// (enumeration order of enumerate_characters) to the Eisenstein side.
EisensteinCombination weak_pair_to_eisenstein(long p1, long p2, const CMatrix& pair_coeffs, long k,
                                              const PrecisionContext& ctx);

// q-expansion of the combination at argument p2*tau (integral q powers).
QExpansion combination_q_expansion(const EisensteinCombination& f, long m_terms,
                                   const PrecisionContext& ctx);

// Value of a truncated expansion at tau in the upper half plane plus a
// crude geometric tail bound.
struct SeriesValue {
    Complex value;
    Real tail_bound;
};
SeriesValue q_series_value(const QExpansion& e, const Complex& tau);

// Max relative residual of the weight-k transformation law at the given
// tau samples.  Throws when the truncation cannot support the target.
Real transform_check(const WeakFunction& omega, const WeakFunction& eta, long k,
                     const std::vector<Complex>& tau_samples, long m_terms,
                     const PrecisionContext& ctx);

}  // namespace vanishforge
