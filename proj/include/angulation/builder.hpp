#ifndef angulation_builder_hpp
#define angulation_builder_hpp

#include "complex.hpp"

namespace angulation {

// Disc with c marked points angulated as a fan: (c-2)/m polygons, all arcs
// sharing the corner at point 0.  Requires c >= m+2 and c = 2 (mod m).
PolygonComplex fan_disc(int m, int c);

// Any unpunctured signature, built by reversing the counting argument:
// start from a fan disc, split boundary circles by gluing same-circle edge
// pairs, then merge circles by gluing cross-circle pairs (adding genus).
// Gluing sites are the lowest admissible edge ids, so output is determined
// by the input.  Throws NoAngulation / NegativeCount via the count check.
PolygonComplex build(const SurfaceSignature& sig, int m);

// All (m+2)-angulations of the labeled convex c-gon (points 0..c-1
// clockwise), canonically sorted.  The two entry points must agree; the
// serial one is the reference, the other may split work across threads.
std::vector<PolygonComplex> enumerate_disc(int m, int c, int bound = 14);
std::vector<PolygonComplex> enumerate_disc_serial(int m, int c, int bound = 14);

}

#endif
