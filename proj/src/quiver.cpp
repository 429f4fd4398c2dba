#include "angulation/quiver.hpp"
#include "angulation/errors.hpp"
#include "angulation/flip.hpp"
#include "angulation/ginzburg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace angulation {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Arc occurrences (id, position) per polygon, in side order.
std::vector<std::pair<int, int>> arc_slots(const Polygon& p) {
    std::vector<std::pair<int, int>> out;
    for (size_t s = 0; s < p.sides.size(); ++s)
        if (p.sides[s].arc) out.push_back({p.sides[s].id, static_cast<int>(s)});
    return out;
}

}  // namespace

GradedArrow partner_arrow(const GradedArrow& a, int m) {
    GradedArrow p;
    p.src = a.dst;
    p.dst = a.src;
    p.grade = m - a.grade;
    return p;
}

PotentialTerm canonical_rotation(PotentialTerm term) {
    size_t n = term.arrows.size();
    size_t best = 0;
    for (size_t k = 1; k < n; ++k) {
        std::vector<GradedArrow> a(term.arrows.begin() + k, term.arrows.end());
        a.insert(a.end(), term.arrows.begin(), term.arrows.begin() + k);
        std::vector<GradedArrow> b(term.arrows.begin() + best, term.arrows.end());
        b.insert(b.end(), term.arrows.begin(), term.arrows.begin() + best);
        if (a < b) best = k;
    }
    std::rotate(term.arrows.begin(), term.arrows.begin() + best, term.arrows.end());
    return term;
}

GradedQuiver quiver_of(const PolygonComplex& cx) {
    require_valid(cx);
    int n = cx.m + 2;
    GradedQuiver q;
    q.m = cx.m;
    q.vertices = arcs_of(cx);
    std::set<std::tuple<int, int, int>> seen;
    for (size_t pi = 0; pi < cx.polygons.size(); ++pi) {
        auto slots = arc_slots(cx.polygons[pi]);
        for (const auto& [i, s] : slots)
            for (const auto& [j, t] : slots) {
                if (i == j) continue;
                int r = mod(t - s - 1, n);
                if (!seen.insert({i, j, r}).second) continue;
                GradedArrow a;
                a.src = i;
                a.dst = j;
                a.grade = r;
                a.origin = ArrowOrigin{static_cast<int>(pi), s, t};
                q.arrows.push_back(a);
            }
    }
    std::sort(q.arrows.begin(), q.arrows.end());
    return q;
}

Superpotential potential_of(const PolygonComplex& cx) {
    GradedQuiver q = quiver_of(cx);
    int n = cx.m + 2;

    // which (src,dst,grade) triples each polygon realizes, for the
    // single-polygon flag
    std::vector<std::set<std::tuple<int, int, int>>> realized(cx.polygons.size());
    for (size_t pi = 0; pi < cx.polygons.size(); ++pi) {
        auto slots = arc_slots(cx.polygons[pi]);
        for (const auto& [i, s] : slots)
            for (const auto& [j, t] : slots)
                if (i != j) realized[pi].insert({i, j, mod(t - s - 1, n)});
    }

    std::map<int, std::vector<GradedArrow>> by_src;
    for (const auto& a : q.arrows) by_src[a.src].push_back(a);

    std::set<std::vector<GradedArrow>> seen;
    Superpotential w;
    for (const auto& a1 : q.arrows)
        for (const auto& a2 : by_src[a1.dst])
            for (const auto& a3 : by_src[a2.dst]) {
                if (a3.dst != a1.src) continue;
                if (a1.grade + a2.grade + a3.grade != cx.m - 1) continue;
                PotentialTerm t;
                t.arrows = {a1, a2, a3};
                t = canonical_rotation(std::move(t));
                if (!seen.insert(t.arrows).second) continue;
                t.single_polygon = false;
                for (const auto& r : realized) {
                    bool all = true;
                    for (const auto& a : t.arrows)
                        if (!r.count({a.src, a.dst, a.grade})) { all = false; break; }
                    if (all) { t.single_polygon = true; break; }
                }
                w.terms.push_back(std::move(t));
            }
    std::sort(w.terms.begin(), w.terms.end());
    return w;
}

bool oriented_angle_check(const PolygonComplex& cx, int i, int j, int r) {
    require_valid(cx);
    auto arcs = arcs_of(cx);
    auto has = [&](int id) { return std::binary_search(arcs.begin(), arcs.end(), id); };
    if (!has(i)) throw UnknownArc("no arc with id " + std::to_string(i));
    if (!has(j)) throw UnknownArc("no arc with id " + std::to_string(j));
    if (i == j) throw InvalidArgument("oriented angle check needs two distinct arcs (loops are excluded)");
    if (r < 0 || r > cx.m) throw InvalidArgument("twist count must lie in 0..m");

    PolygonComplex work = cx;
    for (int k = 0; k < r; ++k) work = flip(work, i).first;
    int n = cx.m + 2;
    for (const auto& p : work.polygons)
        for (size_t s = 0; s < p.sides.size(); ++s) {
            const SideRef& here = p.sides[s];
            const SideRef& next = p.sides[mod(static_cast<int>(s) + 1, n)];
            if (here.arc && here.id == i && next.arc && next.id == j) return true;
        }
    return false;
}

Report check_hypotheses(const GradedQuiver& q, const Superpotential& w) {
    Report rep;
    for (const auto& a : q.arrows) {
        if (a.grade < 0 || a.grade > q.m)
            rep.error("grade-range", "arrow " + std::to_string(a.src) + "->" + std::to_string(a.dst) +
                                          " has grade " + std::to_string(a.grade) + " outside 0.." +
                                          std::to_string(q.m));
        if (a.src == a.dst)
            rep.error("loop", "arrow at vertex " + std::to_string(a.src) + " is a loop");
    }

    std::map<std::tuple<int, int, int>, int> count;
    for (const auto& a : q.arrows) ++count[{a.src, a.dst, a.grade}];
    for (const auto& [key, c] : count) {
        auto [i, j, r] = key;
        auto it = count.find({j, i, q.m - r});
        int cp = (it == count.end()) ? 0 : it->second;
        if (cp != c)
            rep.error("asymmetric", "arrow " + std::to_string(i) + "->" + std::to_string(j) + ":" +
                                        std::to_string(r) + " occurs " + std::to_string(c) +
                                        " times but its partner occurs " + std::to_string(cp));
    }

    for (const auto& t : w.terms) {
        if (t.arrows.size() != 3) {
            rep.error("term-length", "potential term is not a 3-cycle");
            continue;
        }
        int sum = 0;
        for (size_t k = 0; k < 3; ++k) {
            sum += t.arrows[k].grade;
            if (t.arrows[k].dst != t.arrows[(k + 1) % 3].src)
                rep.error("term-travel", "potential term is not a closed travel path");
            if (!count.count({t.arrows[k].src, t.arrows[k].dst, t.arrows[k].grade}))
                rep.error("term-arrow-missing", "potential term uses an arrow absent from the quiver");
        }
        if (sum != q.m - 1)
            rep.error("term-degree", "potential term has grade sum " + std::to_string(sum) +
                                         ", expected " + std::to_string(q.m - 1));
        if (!t.single_polygon)
            rep.note("cross-polygon-term", "a potential 3-cycle is not supported by any single polygon");
    }

    if (rep.ok()) {
        try {
            GinzburgPresentation p = ginzburg_double(q, w);
            rep.merge(verify_degrees(p));
            rep.merge(verify_d_squared(p));
        } catch (const Error& e) {
            rep.error("double-failed", e.what());
        }
    }
    return rep;
}

}
