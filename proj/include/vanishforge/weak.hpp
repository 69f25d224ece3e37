#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "vanishforge/characters.hpp"
#include "vanishforge/complexnum.hpp"
#include "vanishforge/cotangent.hpp"
#include "vanishforge/precision.hpp"

namespace vanishforge {

// Numerical value landed between the zero band and the nonzero band; the
// requested precision cannot decide the claim.
struct AmbiguityError : std::runtime_error {
    long witness_index;
    AmbiguityError(const std::string& what, long index)
        : std::runtime_error(what), witness_index(index) {}
};

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// 1-periodic function with simple poles confined to (1/N)Z, determined by
// the pole-coefficient vector beta(1..N-1); beta(0) = beta(N) = 0 keeps a
// removable singularity at z = 0.
struct WeakFunction {
    long level = 0;                // N >= 3
    std::vector<Complex> beta;     // beta[r-1] = beta(r)
};

WeakFunction make_weak(long level, std::vector<Complex> beta);
WeakFunction weak_from_character(const DirichletCharacter& chi);
WeakFunction zero_weak(long level);

Complex beta_sum(const WeakFunction& w);
Real beta_norm(const WeakFunction& w);
bool in_w0(const WeakFunction& w);
void require_w0(const WeakFunction& w);

// omega(-z); for W0 members the coefficients map to -beta(N-r).
WeakFunction reflect(const WeakFunction& w);

// +1 even, -1 odd, 0 indefinite (relative to the vanish threshold).
int function_parity(const WeakFunction& w, const PrecisionContext& ctx);

// True when some pole j/N with gcd(j, N) = 1 carries a coefficient above
// the vanish threshold.
bool is_new_of_level(const WeakFunction& w, const PrecisionContext& ctx);

// Direct pole-term summation; raises the internal precision when the sum
// cancels heavily, and throws PoleError at a non-removable pole.
Complex evaluate_pole_sum(const WeakFunction& w, const Complex& z);

// Evaluation with the Taylor fallback for |z| < 1/(2N) around 0 (mod 1).
Complex evaluate(const WeakFunction& w, const Complex& z);

// Taylor coefficients of z^0..z^{count-1} at z = 0 via the cotangent
// power-sum expansion.
std::vector<Complex> taylor_coeffs(const WeakFunction& w, long count);

struct OrderResult {
    bool infinite = false;
    long order = 0;
    long witness_u = 0;       // first non-vanishing power index
    Complex witness_value;
};

OrderResult vanishing_order(const WeakFunction& w, const PrecisionContext& ctx);

// Vandermonde matrix of cotangent powers, rows 0..m, columns j = 1..N-1.
struct CotangentMatrix {
    long level = 0;
    long rows = 0;
    std::vector<std::vector<Real>> entries;

    static CotangentMatrix build(long N, long m);
    long numerical_rank(const PrecisionContext& ctx) const;
};

// Basis of ker CotM(N,m) as weak functions, via the divided-difference
// inverse of the Vandermonde system; size max{0, N-m-2}.
std::vector<WeakFunction> cotm_kernel(long N, long m, const PrecisionContext& ctx);

// Order-graded basis alpha_0..alpha_{N-3}: alpha_j = z^j + O(z^{N-2}) and
// alpha_j(-z) = (-1)^j alpha_j(z).
std::vector<WeakFunction> alpha_basis(long N, const PrecisionContext& ctx);

WeakFunction weak_fourier_transform(const WeakFunction& w, DftDirection direction);

}  // namespace vanishforge
