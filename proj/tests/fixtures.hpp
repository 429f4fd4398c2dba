#ifndef angulation_tests_fixtures_hpp
#define angulation_tests_fixtures_hpp

#include "angulation/complex.hpp"
#include "angulation/quiver.hpp"

#include <vector>

// Shared worked examples: a genus-1 one-boundary surface cut into two
// 4-gons, a decagon cut into four 4-gons, an annulus cut into a single
// self-glued 4-gon, and the empty-quiver square.

namespace angulation::fixtures {

inline SideRef A(int id) { return SideRef::make_arc(id); }
inline SideRef B(int id) { return SideRef::make_bnd(id); }

inline PolygonComplex make_complex(int m, const std::vector<std::vector<SideRef>>& polys) {
    PolygonComplex cx;
    cx.m = m;
    for (const auto& sides : polys) {
        Polygon p;
        p.sides = sides;
        cx.polygons.push_back(std::move(p));
    }
    return cx;
}

inline PolygonComplex torus_complex() {
    return make_complex(2, {{A(3), A(2), A(1), B(0)}, {A(3), A(2), A(1), B(1)}});
}

// ten boundary points 0..9 clockwise, boundary edge i runs from point i to
// point i+1, arcs 1 = (0,3), 2 = (3,6), 3 = (6,9)
inline PolygonComplex decagon_complex() {
    return make_complex(2, {{B(0), B(1), B(2), A(1)},
                            {A(1), A(2), A(3), B(9)},
                            {B(3), B(4), B(5), A(2)},
                            {B(6), B(7), B(8), A(3)}});
}

// decagon after flipping arc 2: the middle square re-cut one step over
inline PolygonComplex flipped_decagon_complex() {
    return make_complex(2, {{B(0), B(1), B(2), A(1)},
                            {B(9), A(1), B(3), A(2)},
                            {B(4), B(5), A(3), A(2)},
                            {B(6), B(7), B(8), A(3)}});
}

inline PolygonComplex annulus_complex() {
    return make_complex(2, {{A(1), B(0), A(1), B(1)}});
}

inline PolygonComplex square_complex() {
    return make_complex(2, {{B(0), B(1), B(2), B(3)}});
}

inline GradedArrow arr(int src, int dst, int grade) {
    GradedArrow a;
    a.src = src;
    a.dst = dst;
    a.grade = grade;
    return a;
}

inline GradedQuiver make_quiver(int m, std::vector<int> vertices, std::vector<GradedArrow> arrows) {
    GradedQuiver q;
    q.m = m;
    q.vertices = std::move(vertices);
    q.arrows = std::move(arrows);
    std::sort(q.vertices.begin(), q.vertices.end());
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

inline PotentialTerm term3(GradedArrow a, GradedArrow b, GradedArrow c) {
    PotentialTerm t;
    t.arrows = {a, b, c};
    return canonical_rotation(std::move(t));
}

inline GradedQuiver decagon_quiver() {
    return make_quiver(2, {1, 2, 3},
                       {arr(1, 2, 0), arr(2, 1, 2), arr(2, 3, 0), arr(3, 2, 2), arr(3, 1, 1),
                        arr(1, 3, 1)});
}

inline Superpotential decagon_potential() {
    Superpotential w;
    w.terms = {term3(arr(1, 2, 0), arr(2, 3, 0), arr(3, 1, 1))};
    return w;
}

inline GradedQuiver torus_quiver() {
    return make_quiver(2, {1, 2, 3},
                       {arr(3, 2, 0), arr(2, 3, 2), arr(2, 1, 0), arr(1, 2, 2), arr(3, 1, 1),
                        arr(1, 3, 1)});
}

inline Superpotential torus_potential() {
    Superpotential w;
    w.terms = {term3(arr(3, 2, 0), arr(2, 1, 0), arr(1, 3, 1))};
    return w;
}

inline GradedQuiver flipped_decagon_quiver() {
    return make_quiver(2, {1, 2, 3}, {arr(1, 2, 1), arr(2, 1, 1), arr(2, 3, 2), arr(3, 2, 0)});
}

// what extraction actually yields after flipping the torus complex at arc 2
inline GradedQuiver flipped_torus_quiver() {
    return make_quiver(2, {1, 2, 3},
                       {arr(3, 1, 0), arr(1, 3, 2), arr(1, 2, 0), arr(2, 1, 2), arr(3, 2, 1),
                        arr(2, 3, 1)});
}

inline Superpotential flipped_torus_potential() {
    Superpotential w;
    w.terms = {term3(arr(3, 1, 0), arr(1, 2, 0), arr(2, 3, 1))};
    return w;
}

// what mutation at 2 followed by reduction yields on the torus QP
inline GradedQuiver mutated_torus_quiver() {
    return make_quiver(2, {1, 2, 3}, {arr(3, 2, 1), arr(2, 3, 1), arr(1, 2, 0), arr(2, 1, 2)});
}

}

#endif
