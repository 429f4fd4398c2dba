#include "angulation/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace angulation {

namespace {

struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    }
};

using Occurrences = std::map<int, std::vector<SideLoc>>;

void collect_occurrences(const PolygonComplex& cx, Occurrences& arcs, Occurrences& bnds) {
    for (int p = 0; p < (int)cx.polygons.size(); ++p) {
        const auto& sides = cx.polygons[p].sides;
        for (int s = 0; s < (int)sides.size(); ++s)
            (sides[s].arc ? arcs : bnds)[sides[s].id].push_back({p, s});
    }
}

// structural checks only; topological checks require these to pass first
bool check_structure(const PolygonComplex& cx, const Occurrences& arcs,
                     const Occurrences& bnds, Report& report) {
    bool ok = true;
    if (cx.m < 1) {
        report.error("bad-m", "m must be >= 1, got " + std::to_string(cx.m));
        return false;
    }
    if (cx.polygons.empty()) {
        report.error("empty", "complex has no polygons");
        return false;
    }
    for (int p = 0; p < (int)cx.polygons.size(); ++p) {
        int n = (int)cx.polygons[p].sides.size();
        if (n != cx.m + 2) {
            report.error("polygon-size", "polygon " + std::to_string(p) + " has " +
                                              std::to_string(n) + " sides, expected " +
                                              std::to_string(cx.m + 2));
            ok = false;
        }
    }
    for (const auto& [id, locs] : arcs) {
        if (locs.size() != 2) {
            report.error("arc-multiplicity", "arc " + std::to_string(id) + " occurs " +
                                                 std::to_string(locs.size()) + " times, expected 2");
            ok = false;
        }
    }
    for (const auto& [id, locs] : bnds) {
        if (locs.size() != 1) {
            report.error("boundary-multiplicity",
                         "boundary edge " + std::to_string(id) + " occurs " +
                             std::to_string(locs.size()) + " times, expected 1");
            ok = false;
        }
    }
    return ok;
}

// Corners of polygon p are p*(m+2) .. p*(m+2)+m+1; side s runs from corner s
// to corner s+1.  Gluing the two occurrences (P,s) ~ (Q,t) of an arc
// head-to-tail identifies corner(P,s) ~ corner(Q,t+1) and corner(P,s+1) ~ corner(Q,t).
struct Gluing {
    int n = 0;  // sides per polygon
    int corner_count = 0;
    DisjointSets classes;

    Gluing(const PolygonComplex& cx, const Occurrences& arcs)
        : n(cx.m + 2),
          corner_count((int)cx.polygons.size() * (cx.m + 2)),
          classes(corner_count) {
        for (const auto& [id, locs] : arcs) {
            (void)id;
            const auto& a = locs[0];
            const auto& b = locs[1];
            classes.unite(corner(a.poly, a.pos), corner(b.poly, b.pos + 1));
            classes.unite(corner(a.poly, a.pos + 1), corner(b.poly, b.pos));
        }
    }

    int corner(int poly, int pos) const { return poly * n + ((pos % n) + n) % n; }
};

// A germ is one of the two edge-ends meeting a corner.  The link of a glued
// vertex is the graph on its germs whose edges are polygon corners plus arc
// identifications; a marked point has a single path component, an interior
// vertex a single cycle, anything else is a pinch and not a surface.
struct Germs {
    // germ id: (poly*n + side)*2 + end, end 0 = at start corner, 1 = at end corner
    int n;
    std::vector<int> corner_mate;  // germ joined across the polygon corner
    std::vector<int> glue_mate;    // germ identified by the arc gluing, -1 if boundary

    Germs(const PolygonComplex& cx, const Occurrences& arcs) : n(cx.m + 2) {
        int total = (int)cx.polygons.size() * n * 2;
        corner_mate.assign(total, -1);
        glue_mate.assign(total, -1);
        for (int p = 0; p < (int)cx.polygons.size(); ++p) {
            for (int k = 0; k < n; ++k) {
                int a = id(p, (k + n - 1) % n, 1);  // previous side ends here
                int b = id(p, k, 0);                // this side starts here
                corner_mate[a] = b;
                corner_mate[b] = a;
            }
        }
        for (const auto& [arc, locs] : arcs) {
            (void)arc;
            const auto& u = locs[0];
            const auto& v = locs[1];
            link(id(u.poly, u.pos, 0), id(v.poly, v.pos, 1));
            link(id(u.poly, u.pos, 1), id(v.poly, v.pos, 0));
        }
    }

    int id(int poly, int side, int end) const { return (poly * n + side) * 2 + end; }

    void link(int a, int b) {
        glue_mate[a] = b;
        glue_mate[b] = a;
    }

    int corner_of(int germ) const {
        int side = (germ / 2) % n;
        int poly = germ / 2 / n;
        int end = germ % 2;
        return poly * n + (end ? (side + 1) % n : side);
    }
};

void check_topology(const PolygonComplex& cx, const Occurrences& arcs, Report& report) {
    // connectivity: polygons join only along arcs
    DisjointSets comps((int)cx.polygons.size());
    for (const auto& [id, locs] : arcs) {
        (void)id;
        comps.unite(locs[0].poly, locs[1].poly);
    }
    std::set<int> roots;
    for (int p = 0; p < (int)cx.polygons.size(); ++p) roots.insert(comps.find(p));
    if (roots.size() > 1)
        report.error("disconnected", "complex has " + std::to_string(roots.size()) +
                                         " connected components");

    Gluing gluing(cx, arcs);
    Germs germs(cx, arcs);

    std::map<int, std::vector<int>> germs_by_class;
    for (int g = 0; g < (int)germs.corner_mate.size(); ++g)
        germs_by_class[gluing.classes.find(germs.corner_of(g))].push_back(g);

    for (const auto& [cls, members] : germs_by_class) {
        (void)cls;
        // count link components; remember whether each is a path or a cycle
        std::set<int> seen;
        int components = 0;
        int cycles = 0;
        for (int start : members) {
            if (seen.count(start)) continue;
            ++components;
            bool is_cycle = true;
            // walk both directions from start alternating corner/glue edges
            std::vector<int> frontier{start};
            seen.insert(start);
            while (!frontier.empty()) {
                int g = frontier.back();
                frontier.pop_back();
                for (int next : {germs.corner_mate[g], germs.glue_mate[g]}) {
                    if (next < 0) {
                        is_cycle = false;
                        continue;
                    }
                    if (!seen.count(next)) {
                        seen.insert(next);
                        frontier.push_back(next);
                    }
                }
            }
            if (is_cycle) ++cycles;
        }
        int corner0 = germs.corner_of(members.front());
        std::string where = "vertex class of corner (polygon " +
                            std::to_string(corner0 / (cx.m + 2)) + ", corner " +
                            std::to_string(corner0 % (cx.m + 2)) + ")";
        if (components > 1) {
            report.error("pinched-vertex", where + " has " + std::to_string(components) +
                                               " surface sheets meeting in one point");
        } else if (cycles == 1) {
            // a closed link means no boundary germ: an interior marked point,
            // i.e. a puncture, which this model cannot carry
            report.error("interior-vertex", where + " lies in the interior (puncture)");
        }
    }
}

}  // namespace

void check_signature(const SurfaceSignature& sig) {
    if (sig.g < 0)
        throw InvalidSignature("genus must be >= 0, got " + std::to_string(sig.g));
    if (sig.p < 0)
        throw InvalidSignature("puncture count must be >= 0, got " + std::to_string(sig.p));
    if (sig.b < 1)
        throw InvalidSignature("need at least one boundary component, got " +
                               std::to_string(sig.b));
    if (sig.c < sig.b)
        throw InvalidSignature("every boundary component carries a marked point: c = " +
                               std::to_string(sig.c) + " < b = " + std::to_string(sig.b));
}

ValidationReport validate(const PolygonComplex& cx) {
    Report report;
    Occurrences arcs, bnds;
    collect_occurrences(cx, arcs, bnds);
    if (check_structure(cx, arcs, bnds, report))
        check_topology(cx, arcs, report);
    return report;
}

void require_valid(const PolygonComplex& cx) {
    auto report = validate(cx);
    if (!report.ok()) throw InvalidComplex("invalid complex:\n" + report.to_string());
}

BoundaryStructure boundary_structure(const PolygonComplex& cx) {
    require_valid(cx);
    Occurrences arcs, bnds;
    collect_occurrences(cx, arcs, bnds);
    Gluing gluing(cx, arcs);

    std::set<int> vertex_classes;
    for (int c = 0; c < gluing.corner_count; ++c) vertex_classes.insert(gluing.classes.find(c));

    // each marked point has exactly one outgoing boundary edge, so cycles
    // are traced by repeatedly jumping to the edge leaving the current end
    std::map<int, SideLoc> outgoing;
    for (const auto& [id, locs] : bnds) {
        (void)id;
        const auto& loc = locs[0];
        int cls = gluing.classes.find(gluing.corner(loc.poly, loc.pos));
        if (outgoing.count(cls))
            throw InvalidComplex("two boundary edges leave one marked point");
        outgoing[cls] = loc;
    }

    BoundaryStructure out;
    out.vertex_count = (int)vertex_classes.size();
    std::set<SideLoc> visited;
    for (const auto& [id, locs] : bnds) {
        (void)id;
        SideLoc start = locs[0];
        if (visited.count(start)) continue;
        std::vector<SideLoc> cycle;
        SideLoc cur = start;
        do {
            cycle.push_back(cur);
            visited.insert(cur);
            int end_cls = gluing.classes.find(gluing.corner(cur.poly, cur.pos + 1));
            auto it = outgoing.find(end_cls);
            if (it == outgoing.end())
                throw InvalidComplex("boundary edge ends at a point with no outgoing edge");
            cur = it->second;
        } while (cur != start);
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

SurfaceSignature signature(const PolygonComplex& cx) {
    auto bs = boundary_structure(cx);
    Occurrences arcs, bnds;
    collect_occurrences(cx, arcs, bnds);

    int V = bs.vertex_count;
    int E = (int)arcs.size() + (int)bnds.size();
    int F = (int)cx.polygons.size();
    int chi = V - E + F;
    int b = (int)bs.cycles.size();
    int twice_g = 2 - b - chi;
    if (twice_g < 0 || twice_g % 2 != 0)
        throw InvalidComplex("Euler characteristic " + std::to_string(chi) +
                             " with " + std::to_string(b) + " boundary cycles is not a surface");

    SurfaceSignature sig;
    sig.g = twice_g / 2;
    sig.b = b;
    sig.c = V;
    sig.p = 0;
    check_signature(sig);
    return sig;
}

std::vector<int> arcs_of(const PolygonComplex& cx) {
    Occurrences arcs, bnds;
    collect_occurrences(cx, arcs, bnds);
    std::vector<int> out;
    out.reserve(arcs.size());
    for (const auto& [id, locs] : arcs) {
        (void)locs;
        out.push_back(id);
    }
    return out;
}

std::vector<int> boundary_ids(const PolygonComplex& cx) {
    Occurrences arcs, bnds;
    collect_occurrences(cx, arcs, bnds);
    std::vector<int> out;
    out.reserve(bnds.size());
    for (const auto& [id, locs] : bnds) {
        (void)locs;
        out.push_back(id);
    }
    return out;
}

std::vector<SideLoc> polygons_adjacent_to(const PolygonComplex& cx, int arc) {
    Occurrences arcs, bnds;
    collect_occurrences(cx, arcs, bnds);
    auto it = arcs.find(arc);
    if (it == arcs.end()) throw UnknownArc("no arc with id " + std::to_string(arc));
    return it->second;  // already in (poly, pos) order
}

PolygonComplex canonical(const PolygonComplex& cx) {
    PolygonComplex out = cx;
    for (auto& poly : out.polygons) {
        if (poly.sides.empty()) continue;
        Polygon best = poly;
        Polygon rotated = poly;
        for (size_t r = 1; r < poly.sides.size(); ++r) {
            std::rotate(rotated.sides.begin(), rotated.sides.begin() + 1, rotated.sides.end());
            if (rotated < best) best = rotated;
        }
        poly = best;
    }
    std::sort(out.polygons.begin(), out.polygons.end());
    return out;
}

bool equivalent(const PolygonComplex& a, const PolygonComplex& b) {
    return canonical(a) == canonical(b);
}

}
