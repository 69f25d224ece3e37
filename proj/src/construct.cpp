#include "vanishforge/construct.hpp"

#include <algorithm>
#include <sstream>

namespace vanishforge {

namespace {

Real int_pow(long base, long e) {
    Real r = 1;
    for (long i = 0; i < e; ++i) r *= base;
    return r;
}

Complex minus_two_pi_i_pow(long k) { return ipow(Complex(Real(0), -2 * pi()), k); }

// canonical certificate gauge: largest coefficient modulus 1, first
// nonzero coefficient positive real
EisensteinCombination canonical_gauge(EisensteinCombination f, const PrecisionContext& ctx) {
    f = normalize_terms(std::move(f), ctx);
    if (f.terms.empty()) return f;
    Real m = 0;
    for (const auto& t : f.terms) m = std::max(m, abs(t.coeff));
    Complex first = f.terms.front().coeff;
    Complex phase = conj(first) * Complex(Real(1) / abs(first));
    Complex scale = phase * Complex(Real(1) / m);
    for (auto& t : f.terms) t.coeff *= scale;
    return f;
}

}  // namespace

DualBasisPair dual_bases(long p, const PrecisionContext& ctx) {
    if (!is_odd_prime(p)) throw HypothesisError("dual_bases requires an odd prime p");
    DualBasisPair out;
    out.p = p;
    out.characters = enumerate_characters(p);
    out.gauss.reserve(p - 2);
    for (const auto& chi : out.characters) out.gauss.push_back(gauss_sum(chi));
    out.alphas = alpha_basis(p, ctx);

    // a_chi(c) = (1/(p-1)) sum_j conj(chi(j)) beta^{alpha_c}(j)
    out.a.assign(p - 2, std::vector<Complex>(p - 2));
    for (long c = 0; c <= p - 3; ++c) {
        for (long i = 0; i < p - 2; ++i) {
            std::vector<Complex> vals = out.characters[i].value_table();
            Complex acc;
            for (long j = 1; j < p; ++j) acc += conj(vals[j]) * out.alphas[c].beta[j - 1];
            out.a[c][i] = acc * Complex(Real(1) / (p - 1));
        }
    }
    if (numerical_rank(out.a, ctx.rank_threshold) != p - 2)
        throw AmbiguityError("dual_bases: change-of-basis matrix fails the rank threshold", p);

    out.tilde.assign(p - 2, std::vector<Complex>(p - 2));
    out.hat.assign(p - 2, std::vector<Complex>(p - 2));
    for (long c = 0; c <= p - 3; ++c)
        for (long i = 0; i < p - 2; ++i) {
            Complex twist = out.gauss[i] * out.a[c][i];
            out.tilde[c][i] = Complex(Real(out.characters[i].parity())) * twist;
            out.hat[c][i] = twist;
        }
    return out;
}

EisensteinCombination xi_modular(long c, long d, long k, const DualBasisPair& dual1,
                                 const DualBasisPair& dual2, const PrecisionContext& ctx) {
    const long p1 = dual1.p, p2 = dual2.p;
    if (c < 0 || c > p1 - 3 || d < 0 || d > p2 - 3)
        throw HypothesisError("xi_modular: basis indices out of range");
    if ((c + d) % 2 != (k % 2))
        throw HypothesisError("xi_modular: parity violation, c + d must match k (mod 2)");

    Complex front = Complex(Real(p1) * p2 * to_real(factorial_int(k - 1))) / minus_two_pi_i_pow(k);
    int want = (k % 2 == 0) ? +1 : -1;

    EisensteinCombination f;
    f.weight = k;
    f.p1 = p1;
    f.p2 = p2;
    for (long i = 0; i < p1 - 2; ++i) {
        const DirichletCharacter& chi = dual1.characters[i];
        for (long j = 0; j < p2 - 2; ++j) {
            const DirichletCharacter& psi = dual2.characters[j];
            if (chi.parity() * psi.parity() != want) continue;
            Complex coeff = front * Complex(Real(chi.parity())) * dual1.a[c][i] * dual2.a[d][j];
            f.terms.push_back(EisTerm{chi, psi, coeff});
        }
    }
    return normalize_terms(std::move(f), ctx);
}

EisensteinCombination xi_modular(long c, long d, long k, long p1, long p2,
                                 const PrecisionContext& ctx) {
    DualBasisPair d1 = dual_bases(p1, ctx);
    DualBasisPair d2 = (p2 == p1) ? d1 : dual_bases(p2, ctx);
    return xi_modular(c, d, k, d1, d2, ctx);
}

long eisenstein_space_dimension(long p1, long p2, long k) {
    long count = 0;
    int want = (k % 2 == 0) ? +1 : -1;
    for (long i = 1; i <= p1 - 2; ++i)
        for (long j = 1; j <= p2 - 2; ++j) {
            int par = ((i % 2) ? -1 : +1) * ((j % 2) ? -1 : +1);
            if (par == want) ++count;
        }
    return count;
}

Complex l_map_component(const EisensteinCombination& f, long ell, const PrecisionContext& ctx) {
    const long k = f.weight;
    Real two_pi = 2 * pi();
    Complex global = minus_two_pi_i_pow(k) / Complex(to_real(factorial_int(k - 2))) *
                     Complex(int_pow(f.p2, k - 1) / (4 * pi() * pi()));
    Complex i_pow = ipow(Complex(Real(0), Real(1)), 1 - ell);
    Complex lv = l_value(f, Complex(Real(ell + 1)), ctx);
    Real tp = 1;
    for (long q = 0; q <= ell; ++q) tp *= two_pi;
    return global * Complex(to_real(binomial(k - 2, ell))) * i_pow * Complex(1 / tp) *
           Complex(to_real(factorial_int(ell))) * lv * Complex(int_pow(f.p1, ell));
}

namespace {

ElementReport evaluate_element(const std::string& name, const EisensteinCombination& f,
                               const std::vector<long>& points, const std::set<long>& claimed,
                               const PrecisionContext& ctx) {
    ElementReport rep;
    rep.name = name;
    for (long s : points) {
        LPointReport pr;
        pr.s = s;
        pr.value = l_value(f, Complex(Real(s)), ctx);
        pr.scale = l_value_scale(f, Complex(Real(s)), ctx);
        pr.claimed_zero = claimed.count(s) > 0;
        pr.vanished = pr.scale > 0 && abs(pr.value) < ctx.vanish_threshold * pr.scale;
        pr.trivial = parity_trivial_zero_at(f, s);
        pr.pass = !pr.claimed_zero || pr.vanished;
        rep.points.push_back(std::move(pr));
    }
    return rep;
}

void add_claim(ConstructionCertificate& cert, const std::string& text, bool pass) {
    cert.claims.emplace_back(text, pass);
}

void finish_claims(ConstructionCertificate& cert) {
    cert.all_pass = true;
    for (const auto& [text, ok] : cert.claims)
        if (!ok) cert.all_pass = false;
}

void attach_digests(ConstructionCertificate& cert, const PrecisionContext& ctx) {
    constexpr long kDigestTerms = 8;
    for (const auto& f : cert.basis) {
        QExpansion e = combination_q_expansion(f, kDigestTerms, ctx);
        cert.q_digests.emplace_back(e.coeffs.begin() + 1, e.coeffs.end());
    }
}

}  // namespace

ConstructionCertificate vanishing_space_small_weight(long p1, long p2, long k,
                                                     const std::set<long>& S,
                                                     const PrecisionContext& ctx) {
    if (!is_odd_prime(p1) || !is_odd_prime(p2))
        throw HypothesisError("small-weight construction requires odd primes p1, p2");
    if (!(3 <= k && k <= std::min(p1 - 2, p2 - 2))) {
        std::ostringstream msg;
        msg << "hypothesis violated: 3 <= k <= min{p1-2, p2-2} fails for k = " << k
            << ", min = " << std::min(p1 - 2, p2 - 2);
        throw HypothesisError(msg.str());
    }
    for (long l : S)
        if (l < 0 || l > k - 2)
            throw HypothesisError("hypothesis violated: S must lie inside {0, ..., k-2}");

    DualBasisPair d1 = dual_bases(p1, ctx);
    DualBasisPair d2 = (p2 == p1) ? d1 : dual_bases(p2, ctx);

    ConstructionCertificate cert;
    cert.mode = "small-weight";
    cert.p1 = p1;
    cert.p2 = p2;
    cert.k = k;
    cert.vanish_set = S;
    cert.precision_bits = ctx.precision_bits;
    cert.vanish_threshold = ctx.vanish_threshold;
    cert.rank_threshold = ctx.rank_threshold;
    cert.space_dimension = eisenstein_space_dimension(p1, p2, k);

    KernelIndexSet idx = kernel_index_set(p1, p2, k, S);
    cert.exact_kernel = idx.exact;
    for (auto [m, n] : idx.pairs) {
        cert.basis_indices.emplace_back(m, n);
        cert.basis.push_back(canonical_gauge(xi_modular(m, n, k, d1, d2, ctx), ctx));
    }
    cert.kernel_dimension = static_cast<long>(cert.basis.size());
    for (long s : S) cert.claimed_points.push_back(s + 1);

    // per-element vanishing reports
    bool vanish_ok = true;
    for (size_t i = 0; i < cert.basis.size(); ++i) {
        std::ostringstream name;
        name << "kernel[" << i << "] = xi(alpha_" << cert.basis_indices[i].first << " x alpha_"
             << cert.basis_indices[i].second << ")";
        std::set<long> claimed(cert.claimed_points.begin(), cert.claimed_points.end());
        ElementReport rep =
            evaluate_element(name.str(), cert.basis[i], cert.claimed_points, claimed, ctx);
        for (const auto& pr : rep.points) vanish_ok = vanish_ok && pr.pass;
        cert.reports.push_back(std::move(rep));
    }
    add_claim(cert, "every kernel element vanishes at the promised critical points", vanish_ok);

    // surjectivity witnesses with their scaled functional images
    Real nonzero_band = boost::multiprecision::sqrt(ctx.vanish_threshold);
    std::vector<long> s_sorted(S.begin(), S.end());
    bool witness_ok = true;
    for (long l : s_sorted) {
        cert.witness_targets.push_back(l);
        EisensteinCombination w = xi_modular(l, k - 2 - l, k, d1, d2, ctx);
        std::ostringstream name;
        name << "witness[l=" << l << "] = xi(alpha_" << l << " x alpha_" << (k - 2 - l) << ")";
        ElementReport rep = evaluate_element(name.str(), w, {l + 1}, {}, ctx);
        Real mag = abs(rep.points[0].value);
        witness_ok = witness_ok && mag > nonzero_band * rep.points[0].scale;
        cert.witness_reports.push_back(std::move(rep));
        cert.witnesses.push_back(std::move(w));
    }
    add_claim(cert, "every surjectivity witness is decisively nonzero at its target point",
              witness_ok);

    if (!S.empty()) {
        cert.witness_matrix.assign(s_sorted.size(), std::vector<Complex>(s_sorted.size()));
        for (size_t r = 0; r < cert.witnesses.size(); ++r)
            for (size_t c = 0; c < s_sorted.size(); ++c)
                cert.witness_matrix[r][c] = l_map_component(cert.witnesses[r], s_sorted[c], ctx);
        bool cond_ok = false;
        try {
            cert.witness_condition = condition_estimate(cert.witness_matrix, ctx.rank_threshold);
            cond_ok = cert.witness_condition < Real("1e10");
        } catch (const std::runtime_error&) {
            cert.witness_condition = -1;
        }
        add_claim(cert, "witness images span the target with condition below 1e10", cond_ok);
    } else {
        cert.witness_condition = 0;
    }

    add_claim(cert, "kernel dimension + |S| equals the space dimension",
              cert.kernel_dimension + static_cast<long>(S.size()) == cert.space_dimension);

    // combined span: kernel + witnesses fill the whole newform space
    {
        std::vector<DirichletCharacter> c1 = enumerate_characters(p1);
        std::vector<DirichletCharacter> c2 = enumerate_characters(p2);
        std::vector<std::pair<long, long>> labels;
        int want = (k % 2 == 0) ? +1 : -1;
        for (const auto& chi : c1)
            for (const auto& psi : c2)
                if (chi.parity() * psi.parity() == want) labels.emplace_back(chi.index, psi.index);
        auto to_row = [&](const EisensteinCombination& f) {
            std::vector<Complex> row(labels.size());
            for (const auto& t : f.terms) {
                auto it = std::find(labels.begin(), labels.end(),
                                    std::make_pair(t.chi.index, t.psi.index));
                if (it != labels.end()) row[it - labels.begin()] = t.coeff;
            }
            return row;
        };
        CMatrix all;
        for (const auto& f : cert.basis) all.push_back(to_row(f));
        for (const auto& f : cert.witnesses) all.push_back(to_row(f));
        long rank = numerical_rank(all, ctx.rank_threshold);
        add_claim(cert, "kernel and witnesses together span the full newform space",
                  rank == cert.space_dimension);
    }

    attach_digests(cert, ctx);
    finish_claims(cert);
    return cert;
}

ConstructionCertificate vanishing_space_large_weight(long p1, long p2, long k, long l1, long l2,
                                                     const PrecisionContext& ctx) {
    if (!is_odd_prime(p1) || !is_odd_prime(p2))
        throw HypothesisError("large-weight construction requires odd primes p1, p2");
    if (k < 3) throw HypothesisError("hypothesis violated: k >= 3 fails");
    auto fail = [&](const char* ineq) {
        std::ostringstream msg;
        msg << "hypothesis violated: " << ineq;
        throw HypothesisError(msg.str());
    };
    if (!(std::max<long>(0, p2 - k - 1) <= l1)) fail("max{0, p2-k-1} <= l1");
    if (!(l1 <= p1 - 2)) fail("l1 <= p1-2");
    if (!(std::max<long>(0, p1 - k - 1) <= l2)) fail("max{0, p1-k-1} <= l2");
    if (!(l2 <= p2 - 2)) fail("l2 <= p2-2");
    if (!(l1 + l2 <= k - 1)) fail("l1 + l2 <= k-1");

    DualBasisPair d1 = dual_bases(p1, ctx);
    DualBasisPair d2 = (p2 == p1) ? d1 : dual_bases(p2, ctx);

    ConstructionCertificate cert;
    cert.mode = "large-weight";
    cert.p1 = p1;
    cert.p2 = p2;
    cert.k = k;
    cert.l1 = l1;
    cert.l2 = l2;
    cert.precision_bits = ctx.precision_bits;
    cert.vanish_threshold = ctx.vanish_threshold;
    cert.rank_threshold = ctx.rank_threshold;
    cert.exact_kernel = false;
    cert.space_dimension = eisenstein_space_dimension(p1, p2, k);

    for (long j = 1; j <= l1; ++j) cert.claimed_points.push_back(j);
    for (long j = k - l2; j <= k - 1; ++j) cert.claimed_points.push_back(j);

    long parity_filtered = 0;
    for (long c = l1; c <= p1 - 3; ++c)
        for (long d = l2; d <= p2 - 3; ++d) {
            if ((c + d) % 2 != (k % 2)) continue;
            ++parity_filtered;
            cert.basis_indices.emplace_back(c, d);
            cert.basis.push_back(canonical_gauge(xi_modular(c, d, k, d1, d2, ctx), ctx));
        }
    cert.kernel_dimension = static_cast<long>(cert.basis.size());
    if ((p1 - l1 - 2) * (p2 - l2 - 2) == 0 || cert.kernel_dimension == 0)
        cert.warning = "emitted space is empty for these order constraints";

    bool vanish_ok = true;
    std::set<long> claimed(cert.claimed_points.begin(), cert.claimed_points.end());
    for (size_t i = 0; i < cert.basis.size(); ++i) {
        std::ostringstream name;
        name << "basis[" << i << "] = xi(alpha_" << cert.basis_indices[i].first << " x alpha_"
             << cert.basis_indices[i].second << ")";
        ElementReport rep =
            evaluate_element(name.str(), cert.basis[i], cert.claimed_points, claimed, ctx);
        for (const auto& pr : rep.points) vanish_ok = vanish_ok && pr.pass;
        cert.reports.push_back(std::move(rep));
    }
    add_claim(cert, "every emitted element vanishes on both promised critical strips", vanish_ok);

    // order bound of the input tensors
    bool order_ok = true;
    for (auto [c, d] : cert.basis_indices) {
        TensorElement t = elementary_tensor(p1, p2, c, d);
        BiOrder ord = bi_order(t, ctx);
        order_ok = order_ok && !ord.infinite && ord.first >= l1 && ord.second >= l2;
    }
    add_claim(cert, "input tensors meet the componentwise order bound", order_ok);

    add_claim(cert, "emitted dimension equals the parity-filtered count of the order subspace",
              cert.kernel_dimension == parity_filtered);

    attach_digests(cert, ctx);
    finish_claims(cert);
    return cert;
}

DimensionReport dimension_report(long p1, long p2, long k, const std::set<long>& S) {
    DimensionReport r;
    r.p1 = p1;
    r.p2 = p2;
    r.k = k;
    r.dim_e = eisenstein_space_dimension(p1, p2, k);
    r.dim_e_s = r.dim_e - static_cast<long>(S.size());
    return r;
}

DimensionReport dimension_report(long p1, long p2, long k, long l1, long l2) {
    if (l1 < 0 || l1 > p1 - 2 || l2 < 0 || l2 > p2 - 2)
        throw HypothesisError("dimension_report: order parameters out of range");
    DimensionReport r;
    r.p1 = p1;
    r.p2 = p2;
    r.k = k;
    r.dim_w1_ord = std::max<long>(0, p1 - l1 - 2);
    r.dim_w2_ord = std::max<long>(0, p2 - l2 - 2);
    r.dim_v = r.dim_w1_ord * r.dim_w2_ord;
    long count = 0;
    for (long c = l1; c <= p1 - 3; ++c)
        for (long d = l2; d <= p2 - 3; ++d)
            if ((c + d) % 2 == (k % 2)) ++count;
    r.parity_filtered = count;
    r.dim_e = eisenstein_space_dimension(p1, p2, k);
    return r;
}

VerifyOutcome verify_certificate(const ConstructionCertificate& cert,
                                 const std::vector<long>& extra_points,
                                 const PrecisionContext& ctx) {
    VerifyOutcome out;
    std::set<long> claimed(cert.claimed_points.begin(), cert.claimed_points.end());
    bool ok = true;
    for (size_t i = 0; i < cert.basis.size(); ++i) {
        ElementReport rep = evaluate_element(cert.reports.empty() ? "element" : cert.reports[i].name,
                                             cert.basis[i], cert.claimed_points, claimed, ctx);
        for (const auto& pr : rep.points) {
            std::ostringstream text;
            text << rep.name << ": |L(f;" << pr.s << ")| "
                 << (pr.claimed_zero ? "< vanish threshold" : "reported");
            bool pass = pr.pass;
            out.claims.emplace_back(text.str(), pass);
            ok = ok && pass;
        }
        if (!extra_points.empty()) {
            ElementReport extra =
                evaluate_element(rep.name, cert.basis[i], extra_points, {}, ctx);
            out.extra_reports.push_back(std::move(extra));
        }
    }
    for (size_t i = 0; i < cert.witnesses.size(); ++i) {
        long l = cert.witness_targets[i];
        Complex v = l_value(cert.witnesses[i], Complex(Real(l + 1)), ctx);
        Real scale = l_value_scale(cert.witnesses[i], Complex(Real(l + 1)), ctx);
        bool pass = abs(v) > boost::multiprecision::sqrt(ctx.vanish_threshold) * scale;
        std::ostringstream text;
        text << "witness[l=" << l << "]: |L(f;" << (l + 1) << ")| decisively nonzero";
        out.claims.emplace_back(text.str(), pass);
        ok = ok && pass;
    }
    out.all_pass = ok;
    return out;
}

}  // namespace vanishforge
