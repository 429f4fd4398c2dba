#include "angulation/mutation.hpp"
#include "angulation/errors.hpp"
#include "angulation/flip.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace angulation {

namespace {

std::string arrow_str(const GradedArrow& a) {
    std::ostringstream os;
    os << a.src << "->" << a.dst << ":" << a.grade;
    return os.str();
}

std::string term_str(const PotentialTerm& t) {
    std::ostringstream os;
    for (const auto& a : t.arrows) os << "(" << arrow_str(a) << ")";
    return os.str();
}

using ArrowKey = std::tuple<int, int, int>;

ArrowKey key_of(const GradedArrow& a) { return {a.src, a.dst, a.grade}; }

std::map<ArrowKey, int> arrow_counts(const GradedQuiver& q) {
    std::map<ArrowKey, int> count;
    for (const auto& a : q.arrows) ++count[key_of(a)];
    return count;
}

void require_symmetric(const GradedQuiver& q, const char* who) {
    auto count = arrow_counts(q);
    for (const auto& [key, c] : count) {
        auto [i, j, r] = key;
        if (r < 0 || r > q.m)
            throw AsymmetricInput(std::string(who) + ": arrow " + std::to_string(i) + "->" +
                                  std::to_string(j) + ":" + std::to_string(r) +
                                  " has grade outside 0..m");
        auto it = count.find({j, i, q.m - r});
        if (it == count.end() || it->second != c)
            throw AsymmetricInput(std::string(who) + ": arrow " + std::to_string(i) + "->" +
                                  std::to_string(j) + ":" + std::to_string(r) +
                                  " lacks its symmetric partner");
    }
}

GradedArrow make_arrow(int src, int dst, int grade) {
    GradedArrow a;
    a.src = src;
    a.dst = dst;
    a.grade = grade;
    return a;
}

}  // namespace

MutationResult mutate(const GradedQuiver& q, const Superpotential& w, int v) {
    require_symmetric(q, "mutate");
    if (!std::count(q.vertices.begin(), q.vertices.end(), v))
        throw UnknownVertex("mutate: no vertex " + std::to_string(v));

    int mm = q.m + 1;
    MutationResult out;
    out.trace.vertex = v;
    out.qp.quiver.m = q.m;
    out.qp.quiver.vertices = q.vertices;

    for (const auto& a : q.arrows) {
        GradedArrow b = a;
        if (a.dst == v) {
            b.grade = (a.grade + 1) % mm;
            b.origin.reset();
            out.trace.grade_shifts.push_back({a, a.grade, b.grade});
        } else if (a.src == v) {
            b.grade = (a.grade + mm - 1) % mm;
            b.origin.reset();
            out.trace.grade_shifts.push_back({a, a.grade, b.grade});
        }
        out.qp.quiver.arrows.push_back(b);
    }

    std::vector<PotentialTerm> corrections;
    for (const auto& a : q.arrows) {
        if (a.dst != v) continue;
        for (const auto& b : q.arrows) {
            if (b.src != v || b.grade != 0) continue;
            if (a.src == b.dst) continue;  // composite would be a loop
            GradedArrow c1 = make_arrow(a.src, b.dst, a.grade);
            GradedArrow c2 = make_arrow(b.dst, a.src, q.m - a.grade);
            out.qp.quiver.arrows.push_back(c1);
            out.qp.quiver.arrows.push_back(c2);
            out.trace.composites_added.push_back(c1);
            out.trace.composites_added.push_back(c2);
            // the composite closes up with the partners of the two shifted
            // legs into a degree m-1 cycle; when a potential cycle ran through
            // v this dies with the composite in reduction, otherwise it is the
            // cycle the flipped complex grows.  A grade-m first leg admits no
            // such cycle and contributes nothing.
            if (a.grade < q.m) {
                PotentialTerm corr;
                corr.arrows = {c1, make_arrow(b.dst, v, 0), make_arrow(v, a.src, q.m - a.grade - 1)};
                corr.single_polygon = false;
                corrections.push_back(canonical_rotation(std::move(corr)));
            }
        }
    }
    std::sort(out.qp.quiver.arrows.begin(), out.qp.quiver.arrows.end());

    for (const auto& t : w.terms) {
        int out_pos = -1;
        for (size_t k = 0; k < t.arrows.size(); ++k)
            if (t.arrows[k].src == v) out_pos = static_cast<int>(k);
        if (out_pos < 0) {
            out.qp.potential.terms.push_back(t);
            continue;
        }
        if (t.arrows[out_pos].grade == 0) {
            out.trace.dropped_terms.push_back(t);
            continue;
        }
        PotentialTerm nt = t;
        for (auto& a : nt.arrows) {
            if (a.dst == v) {
                a.grade += 1;
                a.origin.reset();
            } else if (a.src == v) {
                a.grade -= 1;
                a.origin.reset();
            }
            if (a.grade < 0 || a.grade > q.m)
                throw Error("mutate: potential regrade left 0..m, which cannot happen for a "
                            "degree m-1 term");
        }
        out.qp.potential.terms.push_back(canonical_rotation(std::move(nt)));
    }
    out.qp.potential.terms.insert(out.qp.potential.terms.end(), corrections.begin(),
                                  corrections.end());
    std::sort(out.qp.potential.terms.begin(), out.qp.potential.terms.end());

    require_symmetric(out.qp.quiver, "mutate output");
    return out;
}

QP reduce(const GradedQuiver& q, const Superpotential& w, MutationTrace* trace,
          Report* diagnostics) {
    require_symmetric(q, "reduce");
    QP out;
    out.quiver = q;
    out.potential = w;

    for (;;) {
        auto count = arrow_counts(out.quiver);
        ArrowKey found{};
        bool any = false;
        for (const auto& [key, c] : count) {
            auto [i, j, r] = key;
            (void)c;
            if (count.count({i, j, r + 1})) {
                found = key;
                any = true;
                break;
            }
        }
        if (!any) break;

        auto [i, j, r] = found;
        std::set<ArrowKey> removed = {{i, j, r}, {i, j, r + 1}, {j, i, q.m - r - 1}, {j, i, q.m - r}};
        for (const auto& key : removed) {
            auto [s, d, g] = key;
            GradedArrow a = make_arrow(s, d, g);
            auto it = std::find(out.quiver.arrows.begin(), out.quiver.arrows.end(), a);
            if (it == out.quiver.arrows.end())
                throw Error("reduce: symmetric partner vanished mid-cancellation");
            out.quiver.arrows.erase(it);
        }
        if (trace) {
            trace->cancelled_pairs.push_back({make_arrow(i, j, r), make_arrow(i, j, r + 1)});
            trace->cancelled_pairs.push_back(
                {make_arrow(j, i, q.m - r - 1), make_arrow(j, i, q.m - r)});
        }

        std::vector<PotentialTerm> kept;
        for (const auto& t : out.potential.terms) {
            bool hit = false;
            for (const auto& a : t.arrows)
                if (removed.count(key_of(a))) hit = true;
            if (!hit) kept.push_back(t);
        }
        out.potential.terms = std::move(kept);
    }

    if (diagnostics) {
        std::map<std::pair<int, int>, std::vector<int>> grades;
        for (const auto& a : out.quiver.arrows) grades[{a.src, a.dst}].push_back(a.grade);
        for (const auto& [ij, gs] : grades)
            if (gs.size() > 1) {
                std::ostringstream os;
                os << "parallel arrows " << ij.first << "->" << ij.second << " with grades";
                for (int g : gs) os << " " << g;
                os << " remain (grade gaps >= 2 are not cancelled)";
                diagnostics->note("parallel-gap", os.str());
            }
    }
    return out;
}

Report check_flip_compatibility(const PolygonComplex& cx, int arc) {
    Report rep;
    QP base;
    base.quiver = quiver_of(cx);
    base.potential = potential_of(cx);
    MutationResult mut = mutate(base.quiver, base.potential, arc);
    QP lhs = reduce(mut.qp.quiver, mut.qp.potential, &mut.trace);

    PolygonComplex flipped = flip(cx, arc).first;
    QP rhs_raw;
    rhs_raw.quiver = quiver_of(flipped);
    rhs_raw.potential = potential_of(flipped);
    QP rhs = reduce(rhs_raw.quiver, rhs_raw.potential);

    if (lhs.quiver.vertices != rhs.quiver.vertices)
        rep.error("vertex-mismatch", "mutated and flipped quivers disagree on vertex sets");

    if (lhs.quiver.arrows != rhs.quiver.arrows) {
        for (const auto& a : lhs.quiver.arrows)
            if (!std::count(rhs.quiver.arrows.begin(), rhs.quiver.arrows.end(), a))
                rep.error("arrow-only-mutated", arrow_str(a));
        for (const auto& a : rhs.quiver.arrows)
            if (!std::count(lhs.quiver.arrows.begin(), lhs.quiver.arrows.end(), a))
                rep.error("arrow-only-flipped", arrow_str(a));
        if (rep.ok())
            rep.error("arrow-multiplicity", "same arrow sets, different multiplicities");
    }

    if (lhs.potential.terms != rhs.potential.terms) {
        for (const auto& t : lhs.potential.terms)
            if (!std::count(rhs.potential.terms.begin(), rhs.potential.terms.end(), t))
                rep.error("term-only-mutated", term_str(t));
        for (const auto& t : rhs.potential.terms)
            if (!std::count(lhs.potential.terms.begin(), lhs.potential.terms.end(), t))
                rep.error("term-only-flipped", term_str(t));
        if (lhs.potential.terms.size() != rhs.potential.terms.size() && rep.ok())
            rep.error("term-multiplicity", "same terms, different multiplicities");
    }

    if (rep.ok())
        rep.note("compatible", "mutation at " + std::to_string(arc) +
                                   " matches the flipped complex after reduction");
    return rep;
}

}
