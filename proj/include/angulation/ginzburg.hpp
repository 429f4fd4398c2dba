#ifndef angulation_ginzburg_hpp
#define angulation_ginzburg_hpp

#include "quiver.hpp"
#include "report.hpp"

#include <map>
#include <string>

namespace angulation {

// Generators of the doubled dg quiver: every quiver arrow (the lex-lowest
// of each symmetric pair is tagged original, its partner dual) plus one
// loop per vertex.  Degrees: arrow generators -grade, loops -(m+1).
enum class GenKind { original, dual, loop };

struct DgGenerator {
    GenKind kind = GenKind::loop;
    GradedArrow arrow;  // arrow generators only
    int vertex = -1;    // loops only
    int degree = 0;
    std::string name;   // "a<src>_<dst>_<grade>" or "t<vertex>"

    friend bool operator==(const DgGenerator& a, const DgGenerator& b) {
        return a.kind == b.kind && a.arrow == b.arrow && a.vertex == b.vertex &&
               a.degree == b.degree && a.name == b.name;
    }
};

// One summand of a differential image: integer coefficient times a path of
// generator names in travel order.
struct PathTerm {
    long long coef = 0;
    std::vector<std::string> path;

    friend bool operator==(const PathTerm& a, const PathTerm& b) {
        return a.coef == b.coef && a.path == b.path;
    }
};

struct GinzburgPresentation {
    int m = 1;
    std::vector<int> vertices;
    std::vector<DgGenerator> generators;
    // every generator has an entry; an empty sum means d = 0 there
    std::map<std::string, std::vector<PathTerm>> differential;

    const DgGenerator* find(const std::string& name) const;
    int src_of(const std::string& name) const;
    int dst_of(const std::string& name) const;

    friend bool operator==(const GinzburgPresentation& a, const GinzburgPresentation& b) {
        return a.m == b.m && a.vertices == b.vertices && a.generators == b.generators &&
               a.differential == b.differential;
    }
};

// Which member of each symmetric pair counts as original.  The lowest rule
// is canonical; the highest rule exists to test that the choice does not
// matter (same degree multiset, d^2 still zero).
enum class OrientationRule { lowest, highest };

// Build the doubled quiver with the differential: d(u) is the signed cyclic
// derivative of W with respect to u's partner (zero when the partner never
// occurs in W), and d(loop at x) sums [partner(u), u] over arrows u heading
// into x.  Signs are chosen per term so that d^2 = 0; see verify_d_squared.
// Named with the module prefix because plain "double" is a C++ keyword.
GinzburgPresentation ginzburg_double(const GradedQuiver& q, const Superpotential& w,
                                     OrientationRule rule = OrientationRule::lowest);

// deg(alpha) + deg(alpha*) = -m pairing, loop degrees, path composability,
// and homogeneity: every differential image sits exactly one degree above
// its generator.
Report verify_degrees(const GinzburgPresentation& p);

// Symbolically expands d(d(g)) for every generator and reports any nonzero
// remainder with the offending terms.
Report verify_d_squared(const GinzburgPresentation& p);

}

#endif
