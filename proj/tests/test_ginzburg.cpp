#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "angulation/builder.hpp"
#include "angulation/ginzburg.hpp"
#include "fixtures.hpp"

using namespace angulation;
using namespace angulation::fixtures;

namespace {

GinzburgPresentation decagon_presentation() {
    return ginzburg_double(decagon_quiver(), decagon_potential());
}

void require_clean(const GinzburgPresentation& p) {
    Report deg = verify_degrees(p);
    CAPTURE(deg.to_string());
    CHECK(deg.ok());
    Report sq = verify_d_squared(p);
    CAPTURE(sq.to_string());
    CHECK(sq.ok());
}

}

TEST_CASE("decagon presentation has the pinned generators and degrees") {
    GinzburgPresentation p = decagon_presentation();
    CHECK(p.m == 2);
    CHECK(p.generators.size() == 9);  // six arrow generators, three loops

    std::map<std::string, int> degree;
    std::map<std::string, GenKind> kind;
    for (const auto& g : p.generators) {
        degree[g.name] = g.degree;
        kind[g.name] = g.kind;
    }
    CHECK(degree.at("a1_2_0") == 0);
    CHECK(degree.at("a2_1_2") == -2);
    CHECK(degree.at("a2_3_0") == 0);
    CHECK(degree.at("a3_2_2") == -2);
    CHECK(degree.at("a1_3_1") == -1);
    CHECK(degree.at("a3_1_1") == -1);
    CHECK(degree.at("t1") == -3);
    CHECK(degree.at("t2") == -3);
    CHECK(degree.at("t3") == -3);

    CHECK(kind.at("a1_2_0") == GenKind::original);
    CHECK(kind.at("a2_1_2") == GenKind::dual);
    CHECK(kind.at("a1_3_1") == GenKind::original);
    CHECK(kind.at("a3_1_1") == GenKind::dual);
    CHECK(kind.at("t1") == GenKind::loop);

    CHECK(p.src_of("a1_2_0") == 1);
    CHECK(p.dst_of("a1_2_0") == 2);
    CHECK(p.src_of("t2") == 2);
    CHECK(p.dst_of("t2") == 2);
    CHECK(p.find("a9_9_9") == nullptr);
}

TEST_CASE("decagon differential matches the cyclic derivative up to sign") {
    GinzburgPresentation p = decagon_presentation();

    // arrows whose partner is absent from the potential map to zero
    CHECK(p.differential.at("a1_2_0").empty());
    CHECK(p.differential.at("a2_3_0").empty());
    CHECK(p.differential.at("a3_1_1").empty());

    // the other three each hit the rest of the unique potential term
    auto single = [&](const std::string& name) {
        const auto& terms = p.differential.at(name);
        REQUIRE(terms.size() == 1);
        CHECK((terms[0].coef == 1 || terms[0].coef == -1));
        return terms[0].path;
    };
    CHECK(single("a2_1_2") == std::vector<std::string>{"a2_3_0", "a3_1_1"});
    CHECK(single("a3_2_2") == std::vector<std::string>{"a3_1_1", "a1_2_0"});
    CHECK(single("a1_3_1") == std::vector<std::string>{"a1_2_0", "a2_3_0"});

    // loop differentials pair every incoming arrow with its partner
    auto paths_of = [&](const std::string& name) {
        std::set<std::vector<std::string>> out;
        for (const auto& t : p.differential.at(name)) {
            CHECK((t.coef == 1 || t.coef == -1));
            out.insert(t.path);
        }
        return out;
    };
    CHECK(paths_of("t1") == std::set<std::vector<std::string>>{
                                {"a1_2_0", "a2_1_2"}, {"a1_3_1", "a3_1_1"}});
    CHECK(paths_of("t2") == std::set<std::vector<std::string>>{
                                {"a2_1_2", "a1_2_0"}, {"a2_3_0", "a3_2_2"}});
    CHECK(paths_of("t3") == std::set<std::vector<std::string>>{
                                {"a3_2_2", "a2_3_0"}, {"a3_1_1", "a1_3_1"}});
}

TEST_CASE("generator pairing sums to -m and splits original against dual") {
    for (const auto& [q, w] : {std::pair{decagon_quiver(), decagon_potential()},
                               {torus_quiver(), torus_potential()},
                               {flipped_decagon_quiver(), Superpotential{}}}) {
        GinzburgPresentation p = ginzburg_double(q, w);
        for (const auto& g : p.generators) {
            if (g.kind == GenKind::loop) {
                CHECK(g.degree == -(p.m + 1));
                continue;
            }
            GradedArrow pa = partner_arrow(g.arrow, p.m);
            std::string pname =
                "a" + std::to_string(pa.src) + "_" + std::to_string(pa.dst) + "_" +
                std::to_string(pa.grade);
            const DgGenerator* mate = p.find(pname);
            REQUIRE(mate != nullptr);
            CHECK(g.degree + mate->degree == -p.m);
            CHECK(g.kind != mate->kind);
        }
    }
}

TEST_CASE("pinned examples verify completely") {
    require_clean(decagon_presentation());
    require_clean(ginzburg_double(torus_quiver(), torus_potential()));
    require_clean(ginzburg_double(flipped_decagon_quiver(), {}));
    require_clean(ginzburg_double(mutated_torus_quiver(), {}));
}

TEST_CASE("degenerate inputs still verify") {
    GradedQuiver empty;
    empty.m = 2;
    require_clean(ginzburg_double(empty, {}));

    GradedQuiver lone = make_quiver(2, {1}, {});
    GinzburgPresentation p = ginzburg_double(lone, {});
    CHECK(p.generators.size() == 1);
    CHECK(p.generators[0].name == "t1");
    CHECK(p.differential.at("t1").empty());
    require_clean(p);
}

TEST_CASE("extracted presentations verify across whole disc families") {
    for (auto [m, c] : {std::pair{1, 7}, {2, 10}, {3, 11}}) {
        for (const auto& cx : enumerate_disc(m, c)) {
            GinzburgPresentation p = ginzburg_double(quiver_of(cx), potential_of(cx));
            Report deg = verify_degrees(p);
            Report sq = verify_d_squared(p);
            CAPTURE(m);
            CAPTURE(c);
            CAPTURE(sq.to_string());
            CHECK(deg.ok());
            CHECK(sq.ok());
        }
    }
}

TEST_CASE("the orientation choice does not matter") {
    GinzburgPresentation lo = decagon_presentation();
    GinzburgPresentation hi =
        ginzburg_double(decagon_quiver(), decagon_potential(), OrientationRule::highest);
    require_clean(hi);

    std::multiset<int> dlo, dhi;
    for (const auto& g : lo.generators) dlo.insert(g.degree);
    for (const auto& g : hi.generators) dhi.insert(g.degree);
    CHECK(dlo == dhi);

    auto kind_of = [](const GinzburgPresentation& p, const std::string& n) {
        return p.find(n)->kind;
    };
    CHECK(kind_of(lo, "a1_2_0") == GenKind::original);
    CHECK(kind_of(hi, "a1_2_0") == GenKind::dual);
    CHECK(kind_of(hi, "a2_1_2") == GenKind::original);
}

TEST_CASE("tampered differentials are detected") {
    GinzburgPresentation p = decagon_presentation();
    REQUIRE(p.differential.at("t1").size() == 2);
    p.differential.at("t1").pop_back();
    Report r = verify_d_squared(p);
    CHECK_FALSE(r.ok());
    bool saw = false;
    for (const auto& e : r.entries)
        if (e.code == "d-squared") saw = true;
    CHECK(saw);
}

TEST_CASE("tampered degrees are detected") {
    GinzburgPresentation p = decagon_presentation();
    for (auto& g : p.generators)
        if (g.name == "a2_1_2") g.degree = -1;
    CHECK_FALSE(verify_degrees(p).ok());

    GinzburgPresentation q = decagon_presentation();
    q.differential.at("a1_2_0").push_back({1, {"a1_3_1", "a3_2_2"}});
    CHECK_FALSE(verify_degrees(q).ok());  // image degree no longer generator + 1
}

TEST_CASE("doubling rejects unreduced and asymmetric input") {
    GradedQuiver dup = decagon_quiver();
    dup.arrows.push_back(arr(1, 2, 0));
    dup.arrows.push_back(arr(2, 1, 2));
    std::sort(dup.arrows.begin(), dup.arrows.end());
    CHECK_THROWS_AS(ginzburg_double(dup, decagon_potential()), InvalidArgument);

    GradedQuiver lop = make_quiver(2, {1, 2}, {arr(1, 2, 0)});
    CHECK_THROWS_AS(ginzburg_double(lop, {}), AsymmetricInput);
}
