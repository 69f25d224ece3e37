#include "vanishforge/lfunctions.hpp"

#include <stdexcept>

namespace vanishforge {

namespace {

Real int_pow(long base, long e) {
    Real r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

Complex minus_two_pi_i_pow(long k) { return ipow(Complex(Real(0), -2 * pi()), k); }

// 2 (-2 pi i)^k G(psi) / (p2^k (k-1)!)
Complex term_front(const DirichletCharacter& psi, long k) {
    return Complex(Real(2)) * minus_two_pi_i_pow(k) * gauss_sum(psi) /
           Complex(int_pow(psi.modulus, k) * to_real(factorial_int(k - 1)));
}

Complex term_l_value(const EisTerm& t, long k, const Complex& s, const PrecisionContext& ctx) {
    Complex l1 = dirichlet_l(t.chi, s, ctx);
    Complex l2 = dirichlet_l(t.psi.conjugate(), s - Complex(Real(k - 1)), ctx);
    return t.coeff * term_front(t.psi, k) * l1 * l2;
}

void require_not_pole(const EisensteinCombination& f, const Complex& s) {
    if (s.im == 0 && s.re == f.weight)
        throw std::domain_error("l_value: s = k is the pole of the continued L-series");
}

}  // namespace

Complex l_value(const EisensteinCombination& f, const Complex& s, const PrecisionContext& ctx) {
    require_not_pole(f, s);
    Complex acc;
    for (const auto& t : f.terms) acc += term_l_value(t, f.weight, s, ctx);
    return acc;
}

Real l_value_scale(const EisensteinCombination& f, const Complex& s, const PrecisionContext& ctx) {
    require_not_pole(f, s);
    Real m = 0;
    for (const auto& t : f.terms) {
        Real a = abs(term_l_value(t, f.weight, s, ctx));
        if (a > m) m = a;
    }
    return m;
}

Complex completed_lambda(const EisensteinCombination& f, const Complex& s,
                         const PrecisionContext& ctx) {
    if (is_gamma_pole(s))
        throw std::domain_error("completed_lambda: gamma pole at a nonpositive integer");
    Complex two_pi_pow = exp(-s * Complex(boost::multiprecision::log(2 * pi())));
    return two_pi_pow * gamma(s) * l_value(f, s, ctx);
}

Complex lambda_mellin(const EisensteinCombination& f, const Complex& s, long m_terms,
                      const PrecisionContext& ctx) {
    const long k = f.weight;
    const long p1 = f.p1, p2 = f.p2;
    // split point of the Mellin integral
    Real x0 = 1 / boost::multiprecision::sqrt(Real(p1) * p2);
    Real two_pi = 2 * pi();

    QExpansion direct = combination_q_expansion(f, m_terms, ctx);

    // image of f under tau -> -1/(p1 p2 tau): characters swap slots and a
    // chi(-1) sign enters per term
    EisensteinCombination dual;
    dual.weight = k;
    dual.p1 = p2;
    dual.p2 = p1;
    for (const auto& t : f.terms) {
        EisTerm d;
        d.chi = t.psi;
        d.psi = t.chi;
        d.coeff = t.coeff * Complex(Real(t.chi.parity()));
        dual.terms.push_back(std::move(d));
    }
    QExpansion dual_exp = combination_q_expansion(dual, m_terms, ctx);

    Complex acc;
    for (long m = 1; m <= m_terms; ++m) {
        if (direct.coeffs[m].is_zero()) continue;
        Real x = two_pi * m * x0;
        Complex g = upper_incomplete_gamma(s, x);
        Complex mp = exp(-s * Complex(boost::multiprecision::log(two_pi * m)));
        acc += direct.coeffs[m] * mp * g;
    }
    Complex ks = Complex(Real(k)) - s;
    Complex swap_front = ipow(Complex(Real(0), Real(p1)), k) *
                         exp(-s * Complex(boost::multiprecision::log(Real(p1) * p2)));
    Complex acc2;
    for (long m = 1; m <= m_terms; ++m) {
        if (dual_exp.coeffs[m].is_zero()) continue;
        Real x = two_pi * m * x0;
        Complex g = upper_incomplete_gamma(ks, x);
        Complex mp = exp(-ks * Complex(boost::multiprecision::log(two_pi * m)));
        acc2 += dual_exp.coeffs[m] * mp * g;
    }
    return acc + swap_front * acc2;
}

PeriodPolynomial period_polynomial(const EisensteinCombination& f, const PrecisionContext& ctx) {
    const long k = f.weight;
    PeriodPolynomial p;
    p.weight = k;
    p.coeffs.assign(k - 1, Complex());
    Complex i_pow(Real(0), Real(1));  // i^{1-n} tracked incrementally: start n=0 -> i
    for (long n = 0; n <= k - 2; ++n) {
        Complex lam = completed_lambda(f, Complex(Real(n + 1)), ctx);
        Complex c = Complex(to_real(binomial(k - 2, n))) * i_pow * lam;
        if (k % 2 == 1) c = -c;
        p.coeffs[k - 2 - n] = c;
        i_pow *= Complex(Real(0), Real(-1));  // i^{1-(n+1)}
    }
    return p;
}

Real eichler_identity_check(const DirichletCharacter& chi, const DirichletCharacter& psi, long k,
                            const PrecisionContext& ctx) {
    if (k < 3) throw std::invalid_argument("eichler_identity_check requires k >= 3");
    const long p1 = chi.modulus, p2 = psi.modulus;

    EisensteinCombination g;
    g.weight = k;
    g.p1 = p1;
    g.p2 = p2;
    g.terms.push_back(EisTerm{chi, psi, Complex(Real(1))});

    // critical-value side: sum_l C(k-2,l) i^{1-l} Lambda(g; l+1) p1^{l+1} tau^l
    std::vector<Complex> lhs(k - 1);
    Complex i_pow(Real(0), Real(1));
    Real p1_pow = Real(p1);
    for (long l = 0; l <= k - 2; ++l) {
        Complex lam = completed_lambda(g, Complex(Real(l + 1)), ctx);
        lhs[l] = Complex(to_real(binomial(k - 2, l))) * i_pow * lam * Complex(p1_pow);
        i_pow *= Complex(Real(0), Real(-1));
        p1_pow *= p1;
    }

    // residue side: (4 pi^2 chi(-1) / (p2^k (k-1))) res_{z=0}(z^{1-k} omega_psi(z) omega_chi(z tau))
    WeakFunction w_chi = weak_from_character(chi);
    WeakFunction w_psi = weak_from_character(psi);
    std::vector<Complex> rhs = residue_poly(w_chi, w_psi, k - 2);
    Real pi_val = pi();
    Complex front = Complex(4 * pi_val * pi_val * chi.parity() / (int_pow(p2, k) * (k - 1)));
    for (auto& c : rhs) c *= front;

    Real scale = 0;
    for (long l = 0; l <= k - 2; ++l)
        scale = std::max(scale, std::max(abs(lhs[l]), abs(rhs[l])));
    if (scale == 0) return Real(0);
    Real floor = scale * pow2(-40);
    Real worst = 0;
    for (long l = 0; l <= k - 2; ++l) {
        Real denom = std::max(std::max(abs(lhs[l]), abs(rhs[l])), floor);
        Real resid = abs(lhs[l] - rhs[l]) / denom;
        if (resid > worst) worst = resid;
    }
    (void)ctx;
    return worst;
}

bool parity_trivial_zero_at(const EisensteinCombination& f, long s) {
    if (s < 1 || s > f.weight - 1) return false;
    if (f.terms.empty()) return false;
    for (const auto& t : f.terms) {
        // the first Dirichlet factor has no trivial zeros at s >= 1; the
        // second sits at s - k + 1 <= 0
        if (!parity_trivial_zero(t.psi.conjugate(), s - f.weight + 1)) return false;
    }
    return true;
}

}  // namespace vanishforge
