#ifndef angulation_complex_hpp
#define angulation_complex_hpp

#include <compare>
#include <vector>

#include "errors.hpp"
#include "report.hpp"

namespace angulation {

// One polygon side: an interior arc (id occurs exactly twice in the whole
// complex) or a boundary edge (id occurs exactly once).  The two id spaces
// are independent.
struct SideRef {
    bool arc = false;
    int id = 0;

    static SideRef make_arc(int id) { return {true, id}; }
    static SideRef make_bnd(int id) { return {false, id}; }

    friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

// Sides are listed clockwise in the surface orientation; index k runs from
// corner k to corner k+1 (mod size).
struct Polygon {
    std::vector<SideRef> sides;

    friend auto operator<=>(const Polygon&, const Polygon&) = default;
};

// An (m+2)-angulation given as glued polygons.  The two occurrences of an
// arc are identified head-to-tail (orientation reversing), so orientability
// is built into the representation and never stored.
struct PolygonComplex {
    int m = 1;
    std::vector<Polygon> polygons;

    friend bool operator==(const PolygonComplex&, const PolygonComplex&) = default;
};

// (genus, boundary components, boundary marked points, punctures).
// PolygonComplex can only model p = 0; the arc-count formula accepts any p.
struct SurfaceSignature {
    int g = 0;
    int b = 1;
    int c = 1;
    int p = 0;

    friend auto operator<=>(const SurfaceSignature&, const SurfaceSignature&) = default;
};

// throws InvalidSignature unless g,p >= 0, b >= 1 and c >= b
void check_signature(const SurfaceSignature& sig);

struct SideLoc {
    int poly = 0;
    int pos = 0;

    friend auto operator<=>(const SideLoc&, const SideLoc&) = default;
};

// Every structural defect is reported, none thrown: empty report means the
// complex is a legal (m+2)-angulation model (connected oriented surface,
// every vertex on the boundary).
ValidationReport validate(const PolygonComplex& cx);

// validate() and throw InvalidComplex carrying the report text on failure
void require_valid(const PolygonComplex& cx);

// Boundary edges organised into their cycles, in traversal order.
// Only meaningful for a complex that validates.
struct BoundaryStructure {
    std::vector<std::vector<SideLoc>> cycles;
    int vertex_count = 0;  // glued corner classes = marked points
};
BoundaryStructure boundary_structure(const PolygonComplex& cx);

// (g, b, c, p=0) via Euler characteristic of the glued complex
SurfaceSignature signature(const PolygonComplex& cx);

// sorted arc ids, each listed once
std::vector<int> arcs_of(const PolygonComplex& cx);

// sorted boundary edge ids
std::vector<int> boundary_ids(const PolygonComplex& cx);

// the exactly-two occurrences of an arc, ordered by (poly, pos)
std::vector<SideLoc> polygons_adjacent_to(const PolygonComplex& cx, int arc);

// lex-minimal rotation of every polygon, polygons sorted; ids untouched
PolygonComplex canonical(const PolygonComplex& cx);

// equality of canonical forms
bool equivalent(const PolygonComplex& a, const PolygonComplex& b);

}

#endif
