#ifndef angulation_mutation_hpp
#define angulation_mutation_hpp

#include "quiver.hpp"
#include "report.hpp"

#include <tuple>
#include <utility>

namespace angulation {

// Bookkeeping of one mutation: which arrows changed grade, which composite
// arrows appeared, which potential terms were dropped as 2-cycle-containing,
// and (filled by reduce when asked) which parallel pairs were cancelled.
struct MutationTrace {
    int vertex = 0;
    std::vector<std::tuple<GradedArrow, int, int>> grade_shifts;  // arrow, old grade, new grade
    std::vector<GradedArrow> composites_added;
    std::vector<std::pair<GradedArrow, GradedArrow>> cancelled_pairs;
    std::vector<PotentialTerm> dropped_terms;
};

struct MutationResult {
    QP qp;
    MutationTrace trace;
};

// Unreduced graded mutation at vertex v: arrows into v gain a grade
// (mod m+1), arrows out of v lose one, every composite through v whose
// second leg has grade 0 is added with its symmetric partner, and the
// potential is rewritten accordingly: terms whose v-outgoing grade is 0
// are dropped, surviving terms are regraded, and each composite closes
// with the partners of its two shifted legs into a new degree m-1 term.
// Output symmetry is asserted.
MutationResult mutate(const GradedQuiver& q, const Superpotential& w, int v);

// Quasi-isomorphism normal form: repeatedly cancel a parallel pair
// (i->j grades r, r+1) together with its symmetric partner pair, deleting
// every potential term that references a removed arrow value, lowest
// (i,j,r) first, to fixpoint.  Parallel arrows with grade gap >= 2 are not
// cancelled; they are reported through diagnostics instead.
QP reduce(const GradedQuiver& q, const Superpotential& w, MutationTrace* trace = nullptr,
          Report* diagnostics = nullptr);

// Compares reduce(mutate(QP(cx), arc)) against reduce(QP(flip(cx, arc)))
// and reports equality of arrow multisets and potential terms, with a full
// diff on mismatch.
Report check_flip_compatibility(const PolygonComplex& cx, int arc);

}

#endif
