#ifndef angulation_quiver_hpp
#define angulation_quiver_hpp

#include "complex.hpp"
#include "report.hpp"

#include <compare>
#include <optional>

namespace angulation {

// Where an arrow was first read off: polygon index plus the two side
// positions of its source and destination arcs.  Metadata only, never
// part of equality.
struct ArrowOrigin {
    int poly = -1;
    int src_pos = -1;
    int dst_pos = -1;
};

// Arrow src -> dst whose grade counts the sides strictly between the two
// arcs, walking clockwise inside one polygon.  Grades live in {0..m}.
struct GradedArrow {
    int src = 0;
    int dst = 0;
    int grade = 0;
    std::optional<ArrowOrigin> origin;

    friend bool operator==(const GradedArrow& a, const GradedArrow& b) {
        return a.src == b.src && a.dst == b.dst && a.grade == b.grade;
    }
    friend std::strong_ordering operator<=>(const GradedArrow& a, const GradedArrow& b) {
        if (auto c = a.src <=> b.src; c != 0) return c;
        if (auto c = a.dst <=> b.dst; c != 0) return c;
        return a.grade <=> b.grade;
    }
};

// Arrows are kept sorted and compared as a multiset: extraction never
// produces duplicates, but mutation legitimately can.
struct GradedQuiver {
    int m = 1;
    std::vector<int> vertices;
    std::vector<GradedArrow> arrows;

    friend bool operator==(const GradedQuiver& a, const GradedQuiver& b) {
        return a.m == b.m && a.vertices == b.vertices && a.arrows == b.arrows;
    }
};

// One 3-cycle of the superpotential, stored in travel order
// (dst of each arrow = src of the next) anchored at its lex-least rotation.
// single_polygon records whether some single polygon realizes all three
// arrows; it is informational and excluded from equality.
struct PotentialTerm {
    std::vector<GradedArrow> arrows;
    bool single_polygon = true;

    friend bool operator==(const PotentialTerm& a, const PotentialTerm& b) {
        return a.arrows == b.arrows;
    }
    friend std::strong_ordering operator<=>(const PotentialTerm& a, const PotentialTerm& b) {
        return a.arrows <=> b.arrows;
    }
};

// All 3-cycles of total grade m-1, each with coefficient 1, deduplicated
// up to cyclic rotation.  Terms are kept sorted.
struct Superpotential {
    std::vector<PotentialTerm> terms;

    friend bool operator==(const Superpotential& a, const Superpotential& b) {
        return a.terms == b.terms;
    }
};

// A quiver with its superpotential, the unit most operations hand around.
struct QP {
    GradedQuiver quiver;
    Superpotential potential;

    friend bool operator==(const QP& a, const QP& b) {
        return a.quiver == b.quiver && a.potential == b.potential;
    }
};

// The symmetric partner j -> i of grade m - r.
GradedArrow partner_arrow(const GradedArrow& a, int m);

// Rotate a 3-cycle to its lex-least starting arrow.
PotentialTerm canonical_rotation(PotentialTerm term);

// Read the graded quiver off a complex: vertices are the arcs, and each
// ordered pair of distinct arcs on one polygon contributes the arrow whose
// grade counts the sides strictly between them.  Arrows are deduplicated
// on (src,dst,grade) across polygons.
GradedQuiver quiver_of(const PolygonComplex& cx);

// All 3-cycles of grade sum m-1 in the extracted quiver.
Superpotential potential_of(const PolygonComplex& cx);

// True when, after twisting arc i forward r times, some polygon shows j
// immediately clockwise of the moved arc.  Agrees with "the quiver has an
// arrow i -> j of grade r" for every valid complex.
bool oriented_angle_check(const PolygonComplex& cx, int i, int j, int r);

// Structural checks on an extracted (or hand-built) QP: grade range,
// symmetric pairing, term degrees and travel consistency, and the doubled
// presentation's d^2 = 0 certificate.  Cross-polygon terms get a note.
Report check_hypotheses(const GradedQuiver& q, const Superpotential& w);

}

#endif
