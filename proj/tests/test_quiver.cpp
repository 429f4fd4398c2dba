#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "angulation/builder.hpp"
#include "angulation/flip.hpp"
#include "angulation/quiver.hpp"
#include "fixtures.hpp"

using namespace angulation;
using namespace angulation::fixtures;

namespace {

bool has_arrow(const GradedQuiver& q, int src, int dst, int grade) {
    return std::find(q.arrows.begin(), q.arrows.end(), arr(src, dst, grade)) != q.arrows.end();
}

void check_symmetric(const GradedQuiver& q) {
    std::map<std::tuple<int, int, int>, int> count;
    for (const auto& a : q.arrows) ++count[{a.src, a.dst, a.grade}];
    for (const auto& [key, c] : count) {
        auto [i, j, r] = key;
        auto it = count.find({j, i, q.m - r});
        REQUIRE(it != count.end());
        CHECK(it->second == c);
    }
}

}

TEST_CASE("decagon quiver and potential are pinned exactly") {
    CHECK(quiver_of(decagon_complex()) == decagon_quiver());
    CHECK(potential_of(decagon_complex()) == decagon_potential());
    REQUIRE(potential_of(decagon_complex()).terms.size() == 1);
    CHECK(potential_of(decagon_complex()).terms[0].single_polygon);
}

TEST_CASE("torus quiver and potential are pinned exactly") {
    CHECK(quiver_of(torus_complex()) == torus_quiver());
    CHECK(potential_of(torus_complex()) == torus_potential());
    REQUIRE(potential_of(torus_complex()).terms.size() == 1);
    CHECK(potential_of(torus_complex()).terms[0].single_polygon);
}

TEST_CASE("flipping the decagon moves the quiver as pinned") {
    PolygonComplex f = flip(decagon_complex(), 2).first;
    CHECK(quiver_of(f) == flipped_decagon_quiver());
    CHECK(potential_of(f).terms.empty());
}

TEST_CASE("flipping the torus moves the quiver as pinned") {
    PolygonComplex f = flip(torus_complex(), 2).first;
    CHECK(quiver_of(f) == flipped_torus_quiver());
    CHECK(potential_of(f) == flipped_torus_potential());
}

TEST_CASE("relabeling arcs 1 and 3 carries the decagon data onto the torus") {
    // the two pinned examples share one quiver shape up to renaming, which
    // guards against transcription slips in either fixture
    GradedQuiver d = decagon_quiver();
    auto ren = [](int v) { return v == 1 ? 3 : v == 3 ? 1 : v; };
    GradedQuiver renamed;
    renamed.m = d.m;
    renamed.vertices = d.vertices;
    for (const auto& a : d.arrows) renamed.arrows.push_back(arr(ren(a.src), ren(a.dst), a.grade));
    std::sort(renamed.arrows.begin(), renamed.arrows.end());
    CHECK(renamed == torus_quiver());
}

TEST_CASE("complexes with no arc pairs give trivial quivers") {
    GradedQuiver sq = quiver_of(square_complex());
    CHECK(sq.vertices.empty());
    CHECK(sq.arrows.empty());
    CHECK(potential_of(square_complex()).terms.empty());

    // the annulus has one arc, and loops are never read off
    GradedQuiver an = quiver_of(annulus_complex());
    CHECK(an.vertices == std::vector<int>{1});
    CHECK(an.arrows.empty());
    CHECK(potential_of(annulus_complex()).terms.empty());
}

TEST_CASE("a fan triangulation of the pentagon") {
    PolygonComplex disc = fan_disc(1, 5);
    CHECK(quiver_of(disc) == make_quiver(1, {1, 2}, {arr(2, 1, 0), arr(1, 2, 1)}));
    CHECK(potential_of(disc).terms.empty());
}

TEST_CASE("arrow grades pair symmetrically on every enumerated disc") {
    for (auto [m, c] : {std::pair{1, 7}, {2, 10}, {3, 11}}) {
        for (const auto& cx : enumerate_disc(m, c)) {
            check_symmetric(quiver_of(cx));
            for (const auto& t : potential_of(cx).terms) {
                int sum = 0;
                for (const auto& a : t.arrows) sum += a.grade;
                CHECK(sum == m - 1);
            }
        }
    }
}

TEST_CASE("arrow grades pair symmetrically along random walks") {
    PolygonComplex cx = torus_complex();
    for (int step = 0; step < 25; ++step) {
        cx = random_flip_walk(cx, 1, 1000 + step);
        check_symmetric(quiver_of(cx));
    }
}

TEST_CASE("oriented angle check agrees with the extracted quiver") {
    for (const PolygonComplex& cx : {decagon_complex(), torus_complex()}) {
        GradedQuiver q = quiver_of(cx);
        for (int i : q.vertices)
            for (int j : q.vertices) {
                if (i == j) continue;
                for (int r = 0; r <= q.m; ++r) {
                    CAPTURE(i);
                    CAPTURE(j);
                    CAPTURE(r);
                    CHECK(oriented_angle_check(cx, i, j, r) == has_arrow(q, i, j, r));
                }
            }
    }
}

TEST_CASE("pinned oriented angle answers") {
    PolygonComplex d = decagon_complex();
    CHECK(oriented_angle_check(d, 1, 2, 0));
    CHECK_FALSE(oriented_angle_check(d, 1, 2, 1));
    CHECK(oriented_angle_check(d, 1, 3, 1));
    CHECK(oriented_angle_check(d, 2, 1, 2));
}

TEST_CASE("oriented angle check input guards") {
    PolygonComplex d = decagon_complex();
    CHECK_THROWS_AS(oriented_angle_check(d, 9, 1, 0), UnknownArc);
    CHECK_THROWS_AS(oriented_angle_check(d, 1, 9, 0), UnknownArc);
    CHECK_THROWS_AS(oriented_angle_check(d, 1, 1, 0), InvalidArgument);
    CHECK_THROWS_AS(oriented_angle_check(d, 1, 2, -1), InvalidArgument);
    CHECK_THROWS_AS(oriented_angle_check(d, 1, 2, 3), InvalidArgument);
}

TEST_CASE("hypothesis report accepts the pinned examples") {
    CHECK(check_hypotheses(decagon_quiver(), decagon_potential()).ok());
    CHECK(check_hypotheses(torus_quiver(), torus_potential()).ok());
    CHECK(check_hypotheses(flipped_decagon_quiver(), {}).ok());
    CHECK(check_hypotheses(quiver_of(square_complex()), {}).ok());
}

TEST_CASE("hypothesis report flags structural defects") {
    GradedQuiver q = decagon_quiver();
    q.arrows.push_back(arr(1, 2, 7));
    std::sort(q.arrows.begin(), q.arrows.end());
    Report r = check_hypotheses(q, decagon_potential());
    CHECK_FALSE(r.ok());
    bool saw_range = false, saw_asym = false;
    for (const auto& e : r.entries) {
        if (e.code == "grade-range") saw_range = true;
        if (e.code == "asymmetric") saw_asym = true;
    }
    CHECK(saw_range);
    CHECK(saw_asym);

    GradedQuiver loopy = make_quiver(2, {1}, {arr(1, 1, 1)});
    Report lr = check_hypotheses(loopy, {});
    CHECK_FALSE(lr.ok());

    Superpotential bad = decagon_potential();
    bad.terms[0].arrows[0].grade = 2;
    Report tr = check_hypotheses(decagon_quiver(), bad);
    CHECK_FALSE(tr.ok());
}
