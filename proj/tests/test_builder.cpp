#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "angulation/arc_count.hpp"
#include "angulation/builder.hpp"
#include "fixtures.hpp"

using namespace angulation;
using namespace angulation::fixtures;

namespace {

// Fuss-Catalan: dissections of a disc into k parts of m+2 sides each
long long fuss_catalan(long long m, long long k) {
    // binom((m+1)k, k) / (mk + 1), computed without overflow for our sizes
    long long num = 1, den = 1;
    for (long long i = 1; i <= k; ++i) {
        num *= (m + 1) * k - k + i;
        den *= i;
        long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den / (m * k + 1);
}

}

TEST_CASE("fan shapes") {
    PolygonComplex one = fan_disc(2, 4);
    CHECK(one == make_complex(2, {{B(0), B(1), B(2), B(3)}}));

    PolygonComplex two = fan_disc(2, 6);
    CHECK(two == make_complex(2, {{B(0), B(1), B(2), A(1)}, {A(1), B(3), B(4), B(5)}}));

    PolygonComplex three = fan_disc(1, 5);
    CHECK(three ==
          make_complex(1, {{B(0), B(1), A(1)}, {A(1), B(2), A(2)}, {A(2), B(3), B(4)}}));

    for (int m = 1; m <= 4; ++m)
        for (int k = 1; k <= 5; ++k) {
            int c = m * k + 2;
            PolygonComplex cx = fan_disc(m, c);
            require_valid(cx);
            CHECK(static_cast<int>(cx.polygons.size()) == k);
            CHECK(signature(cx) == SurfaceSignature{0, 1, c, 0});
            CHECK(static_cast<long long>(arcs_of(cx).size()) == arc_count({0, 1, c, 0}, m).n);
        }
}

TEST_CASE("fans reject impossible marked point counts") {
    CHECK_THROWS_AS(fan_disc(2, 5), BadCount);
    CHECK_THROWS_AS(fan_disc(2, 2), BadCount);
    CHECK_THROWS_AS(fan_disc(3, 12), BadCount);  // 12 - 2 is not a multiple of 3
    CHECK_THROWS_AS(fan_disc(0, 4), InvalidArgument);
}

TEST_CASE("layered build covers low genus and few boundaries") {
    for (int g = 0; g <= 2; ++g)
        for (int b = 1; b <= 2; ++b)
            for (int c = b; c <= 12; ++c)
                for (int m = 1; m <= 3; ++m) {
                    SurfaceSignature sig{g, b, c, 0};
                    if (!angulation_exists(sig, m)) continue;
                    long long n;
                    try {
                        n = arc_count(sig, m).n;
                    } catch (const NegativeCount&) {
                        continue;
                    }
                    CAPTURE(g);
                    CAPTURE(b);
                    CAPTURE(c);
                    CAPTURE(m);
                    PolygonComplex cx = build(sig, m);
                    require_valid(cx);
                    CHECK(signature(cx) == sig);
                    CHECK(static_cast<long long>(arcs_of(cx).size()) == n);
                }
}

TEST_CASE("building the smallest once-marked torus") {
    PolygonComplex cx = build({1, 1, 2, 0}, 2);
    require_valid(cx);
    CHECK(signature(cx) == SurfaceSignature{1, 1, 2, 0});
    CHECK(arcs_of(cx).size() == 3);
}

TEST_CASE("build rejects punctures and impossible counts") {
    CHECK_THROWS_AS(build({0, 1, 6, 1}, 2), InvalidArgument);
    CHECK_THROWS_AS(build({0, 1, 5, 0}, 2), NoAngulation);
    CHECK_THROWS_AS(build({0, 1, 2, 0}, 2), NegativeCount);
}

TEST_CASE("disc enumeration counts match the product formula") {
    CHECK(enumerate_disc(1, 6).size() == 14);
    CHECK(enumerate_disc(2, 6).size() == 3);
    CHECK(enumerate_disc(2, 12).size() == 273);
    CHECK(enumerate_disc(3, 11).size() == 22);

    for (int m = 1; m <= 3; ++m)
        for (int k = 1; k <= 4; ++k) {
            int c = m * k + 2;
            CHECK(static_cast<long long>(enumerate_disc(m, c).size()) == fuss_catalan(m, k));
        }
}

TEST_CASE("every enumerated dissection is a distinct valid disc") {
    auto all = enumerate_disc(2, 10);
    CHECK(all.size() == 55);
    std::set<std::vector<Polygon>> seen;
    for (const auto& cx : all) {
        require_valid(cx);
        CHECK(signature(cx) == SurfaceSignature{0, 1, 10, 0});
        CHECK(cx == canonical(cx));
        seen.insert(cx.polygons);
    }
    CHECK(seen.size() == all.size());
}

TEST_CASE("threaded enumeration matches the serial reference") {
    for (auto [m, c] : {std::pair{1, 8}, {1, 10}, {2, 10}, {2, 12}, {3, 11}, {4, 10}}) {
        auto fast = enumerate_disc(m, c);
        auto slow = enumerate_disc_serial(m, c);
        REQUIRE(fast.size() == slow.size());
        CHECK(fast == slow);
    }
}

TEST_CASE("enumeration argument checks") {
    CHECK_THROWS_AS(enumerate_disc(2, 16), BoundExceeded);
    CHECK(enumerate_disc(2, 14).size() == 1428);
    CHECK_THROWS_AS(enumerate_disc(2, 7), BadCount);
    CHECK_THROWS_AS(enumerate_disc(0, 6), InvalidArgument);
    CHECK_THROWS_AS(enumerate_disc_serial(2, 16), BoundExceeded);
}

TEST_CASE("the fan appears among the enumerated dissections") {
    auto all = enumerate_disc(2, 8);
    PolygonComplex fan = canonical(fan_disc(2, 8));
    CHECK(std::count(all.begin(), all.end(), fan) == 1);
}
