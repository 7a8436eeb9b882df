#include "sinhlab/real.hpp"

#include <cstdio>
#include <vector>

namespace sinhlab {

namespace {
thread_local mpfr_prec_t g_default_prec = 256;
}

mpfr_prec_t Real::default_precision() { return g_default_prec; }

void Real::set_default_precision(mpfr_prec_t prec) {
    g_default_prec = prec < MPFR_PREC_MIN ? MPFR_PREC_MIN : prec;
}

std::string Real::to_string(int digits) const {
    if (digits <= 0) {
        // Enough digits to round-trip at this precision.
        digits = static_cast<int>(precision() * 0.30103) + 2;
    }
    std::vector<char> buf(static_cast<size_t>(digits) + 32);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

}  // namespace sinhlab
