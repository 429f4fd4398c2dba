#ifndef angulation_flip_hpp
#define angulation_flip_hpp

#include <cstdint>
#include <utility>

#include "complex.hpp"

namespace angulation {

// Diagnostic trace of one flip.  merged_boundary is the cyclic side sequence
// left after cutting out the arc: 2m+2 sides when two polygons merged, m
// sides (the two chains of the one affected polygon, concatenated) when the
// arc was self-glued.
struct FlipRecord {
    int arc = 0;
    std::vector<SideRef> merged_boundary;
};

// Replace the arc by its clockwise twist: cut out both occurrences, slide
// both endpoints one step clockwise along the merged boundary, re-cut.
// Signature and arc count are preserved; the arc keeps its id.
std::pair<PolygonComplex, FlipRecord> flip(const PolygonComplex& cx, int arc);

// same surgery, endpoints slid counterclockwise; inverse of flip
std::pair<PolygonComplex, FlipRecord> flip_inverse(const PolygonComplex& cx, int arc);

// steps flips at seeded-uniform random arcs; every intermediate complex is
// validated (InvalidComplex aborts the walk, which would indicate a bug)
PolygonComplex random_flip_walk(const PolygonComplex& cx, int steps, std::uint64_t seed);

}

#endif
