#include "vanishforge/precision.hpp"

#include <stdexcept>

namespace vanishforge {

unsigned bits_to_digits10(unsigned bits) {
    // ceil(bits * log10(2)) plus slack so round trips do not lose bits
    return static_cast<unsigned>(bits * 0.3010299957 + 4);
}

void set_working_precision(unsigned precision_bits) {
    Real::default_precision(bits_to_digits10(precision_bits + kGuardBits));
}

unsigned working_precision_bits() {
    return static_cast<unsigned>(Real::default_precision() / 0.3010299957) ;
}

Real pow2(long e) {
    Real r = 1;
    mpfr_mul_2si(r.backend().data(), r.backend().data(), e, MPFR_RNDN);
    return r;
}

PrecisionContext PrecisionContext::standard(unsigned bits) {
    PrecisionContext ctx;
    ctx.precision_bits = bits;
    ctx.vanish_threshold = pow2(-100);
    ctx.rank_threshold = pow2(-64);
    return ctx;
}

bool PrecisionContext::valid() const {
    return precision_bits >= 64 && vanish_threshold > 0 && vanish_threshold < 1 &&
           rank_threshold > 0 && rank_threshold < 1;
}

ScopedPrecision::ScopedPrecision(unsigned total_bits)
    : saved_digits_(Real::default_precision()) {
    Real::default_precision(bits_to_digits10(total_bits));
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_digits_); }

}  // namespace vanishforge
