#include "angulation/arc_count.hpp"

#include <string>

namespace angulation {

namespace {

void check_m(int m) {
    if (m < 1) throw InvalidArgument("m must be >= 1, got " + std::to_string(m));
}

long long numerator(const SurfaceSignature& sig, int m) {
    long long g = sig.g, b = sig.b, c = sig.c, p = sig.p;
    return c + (long long)(m + 2) * (b + 2 * (g - 1)) + (2ll * m + 1) * p;
}

}

bool angulation_exists(const SurfaceSignature& sig, int m) {
    check_m(m);
    check_signature(sig);
    long long lhs = (long long)sig.c + 2 * sig.b + 4 * sig.g - 4 + sig.p;
    return ((lhs % m) + m) % m == 0;
}

ArcCountResult arc_count(const SurfaceSignature& sig, int m) {
    if (!angulation_exists(sig, m))
        throw NoAngulation("c + 2b + 4g - 4 + p is not divisible by m");
    long long num = numerator(sig, m);
    if (num < 0)
        throw NegativeCount("arc count formula yields " + std::to_string(num) + "/" +
                            std::to_string(m) + " < 0");
    // divisibility is the congruence, which angulation_exists already granted
    return {true, num / m};
}

ArcCountResult try_arc_count(const SurfaceSignature& sig, int m) {
    if (!angulation_exists(sig, m)) return {false, 0};
    return arc_count(sig, m);
}

}
