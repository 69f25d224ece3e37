#pragma once

#include <boost/multiprecision/mpfr.hpp>

namespace vanishforge {

using Real = boost::multiprecision::mpfr_float;

// Guard bits carried internally beyond the requested precision.
inline constexpr unsigned kGuardBits = 64;

unsigned bits_to_digits10(unsigned bits);

// Sets the ambient mpfr precision to precision_bits + kGuardBits.
// Call once at process start (CLI main / test main) before any Real
// is constructed; values keep the precision they were born with.
void set_working_precision(unsigned precision_bits);
unsigned working_precision_bits();

Real pow2(long e);

// Numeric policy shared by every operation: requested bit precision plus
// the two relative thresholds used for zero detection and rank decisions.
struct PrecisionContext {
    unsigned precision_bits = 256;
    Real vanish_threshold;
    Real rank_threshold;

    static PrecisionContext standard(unsigned bits = 256);
    bool valid() const;
};

// RAII bump of the ambient mpfr precision, used by oracles that need
// headroom over the caller's precision.
class ScopedPrecision {
public:
    explicit ScopedPrecision(unsigned total_bits);
    ~ScopedPrecision();
    ScopedPrecision(const ScopedPrecision&) = delete;
    ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
    unsigned saved_digits_;
};

}  // namespace vanishforge
