#include "abcmin/bigfloat.hpp"

#include <cstdio>
#include <cstdlib>

namespace abcmin {

namespace {

int read_precision_env() {
    const char* s = std::getenv("ABC_PRECISION_BITS");
    if (!s || !*s) return 128;
    char* end = nullptr;
    long bits = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || bits <= 0) return 128;
    if (bits < 100) bits = 100;   // floor: ~30 significant decimal digits
    if (bits > 16384) bits = 16384;
    return static_cast<int>(bits);
}

}  // namespace

int BigFloat::precision_bits() {
    static const int bits = read_precision_env();
    return bits;
}

std::string BigFloat::str(int digits) const {
    char buf[256];
    mpfr_snprintf(buf, sizeof buf, "%.*Rg", digits, v_);
    return buf;
}

bool extended_equal(const BigFloat& a, const BigFloat& b) {
    BigFloat diff = abs(a - b);
    BigFloat scale = abs(a);
    if (abs(b) > scale) scale = abs(b);
    if (!scale.positive()) return cmp(diff, BigFloat(0.0)) == 0;
    return diff <= scalbn2(scale, -(BigFloat::precision_bits() - 40));
}

}  // namespace abcmin
