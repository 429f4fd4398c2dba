#include "angulation/builder.hpp"
#include "angulation/arc_count.hpp"
#include "angulation/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace angulation {

namespace {

// A dissection of the labeled c-gon, each polygon as its increasing vertex
// tuple (u0 < u1 < ... < u_{m+1}).
using Dissection = std::vector<std::vector<int>>;

// Enumerate tuples a = u0 < u1 < ... < u_{m+1} = b where every consecutive
// gap is 1 mod m.  The last gap's congruence is implied by b - a = 1 (mod m).
void base_polygons(int a, int b, int m, std::vector<std::vector<int>>& out) {
    std::vector<int> u(m + 2);
    u[0] = a;
    u[m + 1] = b;
    int i = 1;
    u[1] = a + 1;
    while (i >= 1) {
        if (u[i] > b - (m + 1 - i)) {
            // exhausted this slot, back up and advance the previous one
            --i;
            if (i >= 1) u[i] += m;
            continue;
        }
        if (i == m) {
            out.push_back(u);
            u[i] += m;
            continue;
        }
        ++i;
        u[i] = u[i - 1] + 1;
    }
}

std::vector<Dissection> enum_region(int a, int b, int m) {
    std::vector<Dissection> out;
    std::vector<std::vector<int>> tuples;
    base_polygons(a, b, m, tuples);
    for (const auto& u : tuples) {
        std::vector<Dissection> acc = {{u}};
        for (int i = 0; i <= m; ++i) {
            if (u[i + 1] - u[i] == 1) continue;
            auto subs = enum_region(u[i], u[i + 1], m);
            std::vector<Dissection> next;
            next.reserve(acc.size() * subs.size());
            for (const auto& left : acc)
                for (const auto& sub : subs) {
                    Dissection d = left;
                    d.insert(d.end(), sub.begin(), sub.end());
                    next.push_back(std::move(d));
                }
            acc = std::move(next);
        }
        for (auto& d : acc) out.push_back(std::move(d));
    }
    return out;
}

PolygonComplex dissection_complex(int m, int c, const Dissection& polys) {
    // an edge (x -> y) is a boundary side exactly when y follows x on the circle
    auto is_bnd = [c](int x, int y) { return y == (x + 1) % c; };
    std::set<std::pair<int, int>> chords;
    for (const auto& u : polys) {
        for (size_t i = 0; i + 1 < u.size(); ++i)
            if (!is_bnd(u[i], u[i + 1])) chords.insert({u[i], u[i + 1]});
        if (!is_bnd(u.back(), u.front())) chords.insert({u.front(), u.back()});
    }
    std::map<std::pair<int, int>, int> arc_id;
    int next = 1;
    for (const auto& ch : chords) arc_id[ch] = next++;

    PolygonComplex cx;
    cx.m = m;
    for (const auto& u : polys) {
        Polygon p;
        auto side = [&](int x, int y) {
            if (is_bnd(x, y)) return SideRef::make_bnd(x);
            return SideRef::make_arc(arc_id.at({std::min(x, y), std::max(x, y)}));
        };
        for (size_t i = 0; i + 1 < u.size(); ++i) p.sides.push_back(side(u[i], u[i + 1]));
        p.sides.push_back(side(u.back(), u.front()));
        cx.polygons.push_back(std::move(p));
    }
    return canonical(cx);
}

void check_disc_args(int m, int c, int bound) {
    if (m < 1) throw InvalidArgument("m must be at least 1");
    if (c > bound) throw BoundExceeded("c = " + std::to_string(c) + " exceeds bound " + std::to_string(bound));
    if (c < m + 2 || (c - 2) % m != 0)
        throw BadCount("no (m+2)-angulation of a disc with " + std::to_string(c) + " marked points");
}

void sort_and_check(std::vector<PolygonComplex>& all) {
    std::sort(all.begin(), all.end(),
              [](const PolygonComplex& x, const PolygonComplex& y) { return x.polygons < y.polygons; });
    for (size_t i = 0; i + 1 < all.size(); ++i)
        if (all[i].polygons == all[i + 1].polygons)
            throw Error("enumeration produced a duplicate dissection");
}

// Replace two boundary sides with a fresh arc, gluing the edges together.
PolygonComplex glue_pair(const PolygonComplex& cx, SideLoc a, SideLoc b) {
    int fresh = 0;
    for (int id : arcs_of(cx)) fresh = std::max(fresh, id);
    ++fresh;
    PolygonComplex out = cx;
    out.polygons[a.poly].sides[a.pos] = SideRef::make_arc(fresh);
    out.polygons[b.poly].sides[b.pos] = SideRef::make_arc(fresh);
    return out;
}

int bnd_id(const PolygonComplex& cx, SideLoc at) { return cx.polygons[at.poly].sides[at.pos].id; }

// Lowest-id same-circle non-adjacent pair whose gluing stays valid.
PolygonComplex join_glue(const PolygonComplex& cx) {
    auto bs = boundary_structure(cx);
    std::vector<std::pair<int, std::pair<SideLoc, SideLoc>>> cand;
    for (const auto& cyc : bs.cycles) {
        int len = static_cast<int>(cyc.size());
        if (len < 4) continue;
        for (int i = 0; i < len; ++i)
            for (int j = i + 2; j < len; ++j) {
                if (i == 0 && j == len - 1) continue;  // adjacent around the circle
                int u = bnd_id(cx, cyc[i]), v = bnd_id(cx, cyc[j]);
                cand.push_back({std::min(u, v) * 100000 + std::max(u, v), {cyc[i], cyc[j]}});
            }
    }
    std::sort(cand.begin(), cand.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [key, pair] : cand) {
        PolygonComplex out = glue_pair(cx, pair.first, pair.second);
        if (validate(out).ok()) return out;
    }
    throw Error("no same-circle gluing available");
}

// Lowest-id cross-circle pair, skipping pairs of singleton circles.
PolygonComplex handle_glue(const PolygonComplex& cx) {
    auto bs = boundary_structure(cx);
    std::vector<std::pair<int, std::pair<SideLoc, SideLoc>>> cand;
    for (size_t ci = 0; ci < bs.cycles.size(); ++ci)
        for (size_t cj = ci + 1; cj < bs.cycles.size(); ++cj) {
            if (bs.cycles[ci].size() == 1 && bs.cycles[cj].size() == 1) continue;
            for (SideLoc a : bs.cycles[ci])
                for (SideLoc b : bs.cycles[cj]) {
                    int u = bnd_id(cx, a), v = bnd_id(cx, b);
                    cand.push_back({std::min(u, v) * 100000 + std::max(u, v), {a, b}});
                }
        }
    std::sort(cand.begin(), cand.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [key, pair] : cand) {
        PolygonComplex out = glue_pair(cx, pair.first, pair.second);
        if (validate(out).ok()) return out;
    }
    throw Error("no cross-circle gluing available");
}

}  // namespace

PolygonComplex fan_disc(int m, int c) {
    if (m < 1) throw InvalidArgument("m must be at least 1");
    if (c < m + 2 || (c - 2) % m != 0)
        throw BadCount("no (m+2)-angulation of a disc with " + std::to_string(c) + " marked points");
    int k = (c - 2) / m;
    PolygonComplex cx;
    cx.m = m;
    for (int i = 0; i < k; ++i) {
        Polygon p;
        if (i > 0) p.sides.push_back(SideRef::make_arc(i));
        int lo = (i == 0) ? 0 : i * m + 1;
        int hi = (i == k - 1) ? c - 1 : (i + 1) * m;
        for (int e = lo; e <= hi; ++e) p.sides.push_back(SideRef::make_bnd(e));
        if (i < k - 1) p.sides.push_back(SideRef::make_arc(i + 1));
        cx.polygons.push_back(std::move(p));
    }
    require_valid(cx);
    return cx;
}

PolygonComplex build(const SurfaceSignature& sig, int m) {
    if (sig.p != 0) throw InvalidArgument("layered build only handles unpunctured signatures");
    auto res = arc_count(sig, m);  // throws NoAngulation / NegativeCount as appropriate
    (void)res;
    int c_base = sig.c + 4 * sig.g + 2 * sig.b - 2;
    PolygonComplex cx = fan_disc(m, c_base);
    for (int j = 0; j < sig.b + sig.g - 1; ++j) cx = join_glue(cx);
    for (int h = 0; h < sig.g; ++h) cx = handle_glue(cx);
    require_valid(cx);
    if (signature(cx) != sig) throw Error("layered build reached the wrong signature");
    return cx;
}

std::vector<PolygonComplex> enumerate_disc_serial(int m, int c, int bound) {
    check_disc_args(m, c, bound);
    std::vector<PolygonComplex> all;
    for (const auto& d : enum_region(0, c - 1, m)) all.push_back(dissection_complex(m, c, d));
    sort_and_check(all);
    return all;
}

std::vector<PolygonComplex> enumerate_disc(int m, int c, int bound) {
    check_disc_args(m, c, bound);
    // split on the polygon containing the closing side, expand each branch independently
    std::vector<std::vector<int>> tuples;
    base_polygons(0, c - 1, m, tuples);
    std::vector<std::vector<PolygonComplex>> buckets(tuples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int t = 0; t < static_cast<int>(tuples.size()); ++t) {
        const auto& u = tuples[t];
        std::vector<Dissection> acc = {{u}};
        for (int i = 0; i <= m; ++i) {
            if (u[i + 1] - u[i] == 1) continue;
            auto subs = enum_region(u[i], u[i + 1], m);
            std::vector<Dissection> next;
            next.reserve(acc.size() * subs.size());
            for (const auto& left : acc)
                for (const auto& sub : subs) {
                    Dissection d = left;
                    d.insert(d.end(), sub.begin(), sub.end());
                    next.push_back(std::move(d));
                }
            acc = std::move(next);
        }
        for (const auto& d : acc) buckets[t].push_back(dissection_complex(m, c, d));
    }
    std::vector<PolygonComplex> all;
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    sort_and_check(all);
    return all;
}

}
