#include "vanishforge/eisenstein.hpp"

#include <algorithm>
#include <stdexcept>

namespace vanishforge {

namespace {

void require_admissible(const DirichletCharacter& chi, const DirichletCharacter& psi, long k) {
    if (chi.is_principal() || psi.is_principal())
        throw std::invalid_argument("characters must be non-principal");
    int sign = (k % 2 == 0) ? +1 : -1;
    if (chi.parity() * psi.parity() != sign)
        throw std::invalid_argument("parity mismatch: chi(-1)psi(-1) must equal (-1)^k");
}

Complex minus_two_pi_i_pow(long k) { return ipow(Complex(Real(0), -2 * pi()), k); }

Real int_pow(long base, long e) {
    Real r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

EisensteinCombination normalize_terms(EisensteinCombination f, const PrecisionContext& ctx) {
    Real m = 0;
    for (const auto& t : f.terms) {
        Real a = abs(t.coeff);
        if (a > m) m = a;
    }
    std::vector<EisTerm> kept;
    for (auto& t : f.terms)
        if (m > 0 && abs(t.coeff) >= ctx.vanish_threshold * m) kept.push_back(std::move(t));
    std::sort(kept.begin(), kept.end(), [](const EisTerm& a, const EisTerm& b) {
        if (a.chi.index != b.chi.index) return a.chi.index < b.chi.index;
        return a.psi.index < b.psi.index;
    });
    f.terms = std::move(kept);
    return f;
}

QExpansion eisenstein_q_expansion(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                  long k, long m_terms, const PrecisionContext& ctx) {
    (void)ctx;
    if (k < 3) throw std::invalid_argument("eisenstein_q_expansion requires k >= 3");
    require_admissible(chi, psi, k);
    const long p1 = chi.modulus, p2 = psi.modulus;

    // (F_{p2} psi)(-d) = sum_n psi(n) e(dn/p2)
    std::vector<Complex> psi_vals = psi.value_table();
    std::vector<Complex> roots = roots_of_unity(p2);
    std::vector<Complex> f_neg(p2);
    for (long d = 0; d < p2; ++d) {
        Complex acc;
        for (long n = 1; n < p2; ++n) acc += psi_vals[n] * roots[(d * n) % p2];
        f_neg[d] = acc;
    }
    std::vector<Complex> chi_vals = chi.value_table();

    Complex front = Complex(Real(2)) * minus_two_pi_i_pow(k) /
                    Complex(int_pow(p2, k) * to_real(factorial_int(k - 1)));

    QExpansion out;
    out.weight = k;
    out.scale = p2;
    out.provenance = "eisenstein";
    out.coeffs.assign(m_terms + 1, Complex());
    for (long m = 1; m <= m_terms; ++m) {
        Complex acc;
        for (long d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            Complex term = f_neg[d % p2] * chi_vals[(m / d) % p1];
            if (term.is_zero()) continue;
            acc += Complex(int_pow(d, k - 1)) * term;
        }
        out.coeffs[m] = front * acc;
    }
    return out;
}

QExpansion theta_q_expansion(const WeakFunction& omega, const WeakFunction& eta, long k,
                             long m_terms, const PrecisionContext& ctx) {
    if (k < 3) throw std::invalid_argument("theta_q_expansion requires k >= 3");
    require_w0(omega);
    require_w0(eta);
    int sgn_omega = function_parity(omega, ctx);
    int sgn_eta = function_parity(eta, ctx);
    int want = (k % 2 == 0) ? +1 : -1;
    if (sgn_omega == 0 || sgn_eta == 0 || sgn_omega * sgn_eta != want)
        throw std::invalid_argument("theta_q_expansion: pair parity does not match (-1)^k");

    const long N = eta.level;
    WeakFunction f_omega = weak_fourier_transform(omega, DftDirection::Forward);

    auto beta_at = [](const WeakFunction& w, long idx) -> Complex {
        long r = idx % w.level;
        if (r < 0) r += w.level;
        if (r == 0) return Complex();
        return w.beta[r - 1];
    };

    Real front = 2 / int_pow(N, k - 1);
    QExpansion out;
    out.weight = k;
    out.scale = N;
    out.provenance = "theta";
    out.coeffs.assign(m_terms + 1, Complex());
    for (long m = 1; m <= m_terms; ++m) {
        Complex acc;
        for (long d = 1; d <= m; ++d) {
            if (m % d != 0) continue;
            Complex be = beta_at(eta, d);
            if (be.is_zero()) continue;
            Complex fo = beta_at(f_omega, m / d);
            if (fo.is_zero()) continue;
            acc += Complex(int_pow(d, k - 1)) * be * fo;
        }
        out.coeffs[m] = Complex(front) * acc;
    }
    return out;
}

Complex weak_eisenstein_constant(const DirichletCharacter& chi, const DirichletCharacter& psi,
                                 long k) {
    require_admissible(chi, psi, k);
    Complex g_psi = gauss_sum(psi);
    Complex g_chi_bar = gauss_sum(chi.conjugate());
    Complex num = Complex(Real(chi.parity())) * minus_two_pi_i_pow(k) * g_psi;
    Complex den = Complex(Real(psi.modulus) * to_real(factorial_int(k - 1))) * g_chi_bar;
    return num / den;
}

EisensteinCombination weak_pair_to_eisenstein(long p1, long p2, const CMatrix& pair_coeffs, long k,
                                              const PrecisionContext& ctx) {
    std::vector<DirichletCharacter> chars1 = enumerate_characters(p1);
    std::vector<DirichletCharacter> chars2 = enumerate_characters(p2);
    if (static_cast<long>(pair_coeffs.size()) != p1 - 2)
        throw std::invalid_argument("weak_pair_to_eisenstein: coefficient rows must be p1-2");
    EisensteinCombination f;
    f.weight = k;
    f.p1 = p1;
    f.p2 = p2;
    int want = (k % 2 == 0) ? +1 : -1;
    for (long i = 0; i < p1 - 2; ++i) {
        if (static_cast<long>(pair_coeffs[i].size()) != p2 - 2)
            throw std::invalid_argument("weak_pair_to_eisenstein: coefficient cols must be p2-2");
        for (long j = 0; j < p2 - 2; ++j) {
            const Complex& b = pair_coeffs[i][j];
            if (b.is_zero()) continue;
            const DirichletCharacter& chi0 = chars1[i];
            const DirichletCharacter& psi0 = chars2[j];
            if (chi0.parity() * psi0.parity() != want)
                throw std::invalid_argument(
                    "weak_pair_to_eisenstein: pair parity does not match (-1)^k");
            // omega_{chi0} (x) omega_{psi0} feeds E_k(conj chi0, conj psi0; p2 tau)
            // with the correspondence constant inverted
            Complex inv_const = Complex(Real(1)) /
                                weak_eisenstein_constant(chi0.conjugate(), psi0.conjugate(), k);
            EisTerm t;
            t.chi = chi0.conjugate();
            t.psi = psi0.conjugate();
            t.coeff = b * inv_const;
            f.terms.push_back(std::move(t));
        }
    }
    // merge duplicate (chi,psi) labels
    EisensteinCombination merged;
    merged.weight = k;
    merged.p1 = p1;
    merged.p2 = p2;
    for (auto& t : f.terms) {
        bool found = false;
        for (auto& m : merged.terms)
            if (m.chi == t.chi && m.psi == t.psi) {
                m.coeff += t.coeff;
                found = true;
                break;
            }
        if (!found) merged.terms.push_back(std::move(t));
    }
    return normalize_terms(std::move(merged), ctx);
}

QExpansion combination_q_expansion(const EisensteinCombination& f, long m_terms,
                                   const PrecisionContext& ctx) {
    QExpansion out;
    out.weight = f.weight;
    out.scale = 1;  // argument p2*tau turns q^{m/p2} into q^m
    out.provenance = "combination";
    out.coeffs.assign(m_terms + 1, Complex());
    for (const auto& t : f.terms) {
        QExpansion e = eisenstein_q_expansion(t.chi, t.psi, f.weight, m_terms, ctx);
        for (long m = 0; m <= m_terms; ++m) out.coeffs[m] += t.coeff * e.coeffs[m];
    }
    return out;
}

SeriesValue q_series_value(const QExpansion& e, const Complex& tau) {
    if (tau.im <= 0) throw std::invalid_argument("q_series_value: tau must lie in the upper half plane");
    const long M = static_cast<long>(e.coeffs.size()) - 1;
    Complex q_step = e_at(tau * Complex(Real(1) / e.scale));
    Complex qp(Real(1));
    Complex acc;
    Real last = 0;
    for (long m = 1; m <= M; ++m) {
        qp *= q_step;
        if (e.coeffs[m].is_zero()) continue;
        Complex term = e.coeffs[m] * qp;
        acc += term;
        last = abs(term);
    }
    // geometric bound on the dropped tail: the coefficients of a weight-k
    // series grow polynomially, absorbed into a ratio margin
    Real ratio = abs(q_step);
    Real margin = ratio * 2;
    Real tail;
    if (margin < 1) {
        Real cmax = 0;
        for (long m = std::max<long>(1, M - 10); m <= M; ++m) {
            Real a = abs(e.coeffs[m]);
            if (a > cmax) cmax = a;
        }
        tail = cmax * abs(qp) * margin / (1 - margin) * 4;
    } else {
        tail = -1;  // no usable bound
    }
    return SeriesValue{acc, tail};
}

Real transform_check(const WeakFunction& omega, const WeakFunction& eta, long k,
                     const std::vector<Complex>& tau_samples, long m_terms,
                     const PrecisionContext& ctx) {
    if (omega.level != eta.level) throw std::invalid_argument("transform_check requires equal levels");
    QExpansion lhs_exp = theta_q_expansion(omega, eta, k, m_terms, ctx);
    WeakFunction omega_hat = reflect(omega);
    QExpansion rhs_exp = theta_q_expansion(eta, omega_hat, k, m_terms, ctx);

    Real worst = 0;
    for (const Complex& tau : tau_samples) {
        Complex minus_inv = Complex(Real(-1)) / tau;
        SeriesValue lhs = q_series_value(lhs_exp, minus_inv);
        SeriesValue rhs1 = q_series_value(rhs_exp, tau);
        // res_{z=0}(z^{k-1} eta(z) omega_hat(z/tau)) vanishes for pairs
        // regular at 0 and k >= 3; kept explicit for the general law
        Complex residue_term;
        Complex rhs = -ipow(tau, k) * rhs1.value + Complex(Real(2)) * unit_i() * Complex(pi()) * residue_term;
        Real scale = std::max(abs(lhs.value), abs(rhs));
        if (scale == 0) continue;
        if (lhs.tail_bound < 0 || rhs1.tail_bound < 0 ||
            lhs.tail_bound + rhs1.tail_bound > scale * ctx.vanish_threshold)
            throw std::runtime_error("transform_check: truncation insufficient for the target accuracy");
        Real resid = abs(lhs.value - rhs) / scale;
        if (resid > worst) worst = resid;
    }
    return worst;
}

}  // namespace vanishforge
