#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vanishforge/lfunctions.hpp"

namespace vanishforge {

// A construction hypothesis failed; message cites the violated inequality.
struct HypothesisError : std::invalid_argument {
    explicit HypothesisError(const std::string& what) : std::invalid_argument(what) {}
};

// Change of basis between the order-graded basis and the character basis
// of the level-p weak functions, with the two Gauss-sum-twisted dual
// coefficient families derived from it.
struct DualBasisPair {
    long p = 0;
    std::vector<DirichletCharacter> characters;  // enumeration order
    std::vector<Complex> gauss;                  // Gauss sums per character
    std::vector<WeakFunction> alphas;
    CMatrix a;      // a[c][i]: coefficient of omega_{chi_i} in alpha_c
    CMatrix tilde;  // tilde[c][i]: coefficient of omega_{conj chi_i} in the twisted alpha~_c
    CMatrix hat;    // hat[d][i]: coefficient of omega_{conj chi_i} in the twisted alpha^_d
};

DualBasisPair dual_bases(long p, const PrecisionContext& ctx);

// xi(alpha_c (x) alpha_d) as an Eisenstein combination: coefficient
// p1 p2 (k-1)! / (-2 pi i)^k * chi(-1) a_chi(c) a_psi(d) on E_k(chi, psi; p2 tau).
EisensteinCombination xi_modular(long c, long d, long k, const DualBasisPair& dual1,
                                 const DualBasisPair& dual2, const PrecisionContext& ctx);
EisensteinCombination xi_modular(long c, long d, long k, long p1, long p2,
                                 const PrecisionContext& ctx);

struct LPointReport {
    long s = 0;
    Complex value;
    Real scale;
    bool claimed_zero = false;
    bool vanished = false;
    bool trivial = false;
    bool pass = false;
};

struct ElementReport {
    std::string name;
    std::vector<LPointReport> points;
};

struct ConstructionCertificate {
    std::string mode;  // "small-weight" | "large-weight"
    long p1 = 0, p2 = 0, k = 0;
    std::set<long> vanish_set;               // small-weight S
    long l1 = -1, l2 = -1;                   // large-weight orders
    std::vector<long> claimed_points;        // s values promised to vanish
    unsigned precision_bits = 0;
    Real vanish_threshold, rank_threshold;

    std::vector<std::pair<long, long>> basis_indices;  // (c,d) per element
    std::vector<EisensteinCombination> basis;
    bool exact_kernel = false;
    long kernel_dimension = 0;
    long space_dimension = 0;

    std::vector<long> witness_targets;
    std::vector<EisensteinCombination> witnesses;
    CMatrix witness_matrix;
    Real witness_condition;

    std::vector<ElementReport> reports;
    std::vector<ElementReport> witness_reports;
    std::vector<std::vector<Complex>> q_digests;  // first coefficients per basis element
    std::vector<std::pair<std::string, bool>> claims;
    std::string warning;
    bool all_pass = false;
};

// dim of the weight-k newform space spanned by the admissible pairs.
long eisenstein_space_dimension(long p1, long p2, long k);

// Scaled critical-value functional of the small-weight exact sequence.
Complex l_map_component(const EisensteinCombination& f, long ell, const PrecisionContext& ctx);

ConstructionCertificate vanishing_space_small_weight(long p1, long p2, long k,
                                                     const std::set<long>& S,
                                                     const PrecisionContext& ctx);

ConstructionCertificate vanishing_space_large_weight(long p1, long p2, long k, long l1, long l2,
                                                     const PrecisionContext& ctx);

struct DimensionReport {
    long p1 = 0, p2 = 0, k = 0;
    long dim_w1_ord = -1;  // dim of the order >= l1 space at level p1
    long dim_w2_ord = -1;
    long dim_v = -1;       // (p1-l1-2)(p2-l2-2)
    long parity_filtered = -1;
    long dim_e = -1;
    long dim_e_s = -1;     // small-weight dim E - |S|
};

DimensionReport dimension_report(long p1, long p2, long k, const std::set<long>& S);
DimensionReport dimension_report(long p1, long p2, long k, long l1, long l2);

// Re-evaluates every recorded claim at the current precision; extra
// points are reported but not judged.
struct VerifyOutcome {
    bool all_pass = false;
    std::vector<std::pair<std::string, bool>> claims;
    std::vector<ElementReport> extra_reports;
};

VerifyOutcome verify_certificate(const ConstructionCertificate& cert,
                                 const std::vector<long>& extra_points,
                                 const PrecisionContext& ctx);

}  // namespace vanishforge
