#include "angulation/flip.hpp"

#include <random>
#include <string>

namespace angulation {

namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// sides at positions from, from+1, ..., from+count-1 (cyclic)
std::vector<SideRef> slice(const std::vector<SideRef>& sides, int from, int count) {
    std::vector<SideRef> out;
    out.reserve(count);
    int n = (int)sides.size();
    for (int i = 0; i < count; ++i) out.push_back(sides[mod(from + i, n)]);
    return out;
}

std::pair<PolygonComplex, FlipRecord> twist(const PolygonComplex& cx, int arc, int dir) {
    require_valid(cx);
    auto locs = polygons_adjacent_to(cx, arc);
    int m = cx.m;
    PolygonComplex out = cx;
    FlipRecord record;
    record.arc = arc;

    if (locs[0].poly != locs[1].poly) {
        // Two polygons merge into a (2m+2)-gon.  Its boundary word starts
        // right after the arc slot of the first polygon, so the removed arc
        // spanned corners 0 and m+1 of the word.
        const auto& P = cx.polygons[locs[0].poly].sides;
        const auto& Q = cx.polygons[locs[1].poly].sides;
        std::vector<SideRef> word = slice(P, locs[0].pos + 1, m + 1);
        auto tail = slice(Q, locs[1].pos + 1, m + 1);
        word.insert(word.end(), tail.begin(), tail.end());
        record.merged_boundary = word;

        int n = 2 * m + 2;
        int u = mod(0 + dir, n);
        int v = mod(m + 1 + dir, n);

        // chord u -> v splits the word into [u..v-1] and [v..u-1]
        Polygon A, B;
        A.sides = slice(word, u, mod(v - u, n));
        A.sides.push_back(SideRef::make_arc(arc));
        B.sides = slice(word, v, mod(u - v, n));
        B.sides.push_back(SideRef::make_arc(arc));

        out.polygons[locs[0].poly] = A;
        out.polygons[locs[1].poly] = B;
    } else {
        // Self-glued arc: the polygon alone forms an annulus around it, one
        // boundary chain per side of the arc.  Each chain is a full boundary
        // circle of that annulus, so sliding an endpoint rotates its chain.
        const auto& R = cx.polygons[locs[0].poly].sides;
        int s = locs[0].pos, t = locs[1].pos;
        int lenA = mod(t - s - 1, m + 2);
        int lenB = mod(s - t - 1, m + 2);
        // a valid complex cannot carry an empty chain (the enclosed endpoint
        // would be an interior vertex), and lenA + lenB == m
        auto chainA = slice(R, s + 1, lenA);
        auto chainB = slice(R, t + 1, lenB);
        record.merged_boundary = chainA;
        record.merged_boundary.insert(record.merged_boundary.end(), chainB.begin(),
                                      chainB.end());

        Polygon N;
        N.sides.push_back(SideRef::make_arc(arc));
        auto rotA = slice(chainA, mod(dir, lenA), lenA);
        N.sides.insert(N.sides.end(), rotA.begin(), rotA.end());
        N.sides.push_back(SideRef::make_arc(arc));
        auto rotB = slice(chainB, mod(dir, lenB), lenB);
        N.sides.insert(N.sides.end(), rotB.begin(), rotB.end());

        out.polygons[locs[0].poly] = N;
    }

    require_valid(out);
    return {out, record};
}

}

std::pair<PolygonComplex, FlipRecord> flip(const PolygonComplex& cx, int arc) {
    return twist(cx, arc, +1);
}

std::pair<PolygonComplex, FlipRecord> flip_inverse(const PolygonComplex& cx, int arc) {
    return twist(cx, arc, -1);
}

PolygonComplex random_flip_walk(const PolygonComplex& cx, int steps, std::uint64_t seed) {
    if (steps < 0) throw InvalidArgument("walk steps must be >= 0");
    require_valid(cx);
    PolygonComplex cur = cx;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < steps; ++i) {
        auto arcs = arcs_of(cur);
        if (arcs.empty())
            throw InvalidArgument("cannot walk on a complex without arcs");
        std::uniform_int_distribution<size_t> pick(0, arcs.size() - 1);
        cur = flip(cur, arcs[pick(rng)]).first;
    }
    return cur;
}

}
