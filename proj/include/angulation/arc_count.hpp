#ifndef angulation_arc_count_hpp
#define angulation_arc_count_hpp

#include "complex.hpp"

namespace angulation {

struct ArcCountResult {
    bool exists = false;
    long long n = 0;  // meaningful only when exists
};

// c + 2b + 4g - 4 + p = 0 (mod m)
bool angulation_exists(const SurfaceSignature& sig, int m);

// Number of arcs in any (m+2)-angulation of the surface.  All arithmetic is
// integral: n*m = c + (m+2)(b + 2(g-1)) + (2m+1)p, and the congruence above
// is exactly divisibility of the right hand side by m.
// Throws NoAngulation when the congruence fails, NegativeCount when the
// formula is exact but negative (degenerate small surfaces).
ArcCountResult arc_count(const SurfaceSignature& sig, int m);

// same, but reports failure in the result instead of throwing NoAngulation
ArcCountResult try_arc_count(const SurfaceSignature& sig, int m);

}

#endif
