#include "zgon/embedding.hpp"
#include "zgon/enumerate.hpp"
#include "zgon/gon.hpp"
#include "zgon/rational.hpp"

#include <doctest.h>

using namespace zgon;

TEST_CASE("point order is lexicographic in (copy, index)") {
    CHECK(Point{1, 0} == Point{1, 0});
    CHECK(Point{1, 5} < Point{2, -100});
    CHECK(Point{2, 3} < Point{2, 4});
    // trichotomy on a small window
    const GonConfig g{2};
    const auto pts = enumerate_points(g, 3);
    for (const Point& a : pts)
        for (const Point& b : pts) {
            const int flags = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
            CHECK(flags == 1);
        }
}

TEST_CASE("compare validates the configuration") {
    const GonConfig g{2};
    CHECK(compare(g, Point{1, 4}, Point{2, -1}) == std::strong_ordering::less);
    CHECK_THROWS_AS(compare(g, Point{3, 0}, Point{1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(GonConfig{0}.require_valid(), std::invalid_argument);
}

TEST_CASE("successor and predecessor step within the copy") {
    CHECK(succ(Point{1, 0}) == Point{1, 1});
    CHECK(pred(Point{3, -7}) == Point{3, -8});
    CHECK(succ(pred(Point{2, 0})) == Point{2, 0});
    // no vertex strictly between a point and its successor
    const auto pts = enumerate_points(GonConfig{2}, 4);
    for (const Point& z : pts)
        for (const Point& w : pts) CHECK_FALSE((z < w && w < succ(z)));
}

TEST_CASE("embedding hits the documented sample angles") {
    const Embedding e;
    CHECK(e.angle(GonConfig{1}, Point{1, 0}) == Rat(1));       // pi
    CHECK(e.angle(GonConfig{2}, Point{1, 0}) == Rat(1, 2));    // pi/2
    CHECK(e.angle(GonConfig{1}, Point{1, 0}) < e.angle(GonConfig{1}, Point{1, 1}));
}

TEST_CASE("both embeddings are strictly monotone and stay inside their arcs") {
    for (auto squash : {Embedding::Squash::kHarmonic, Embedding::Squash::kSoft}) {
        const Embedding e(squash);
        for (int m : {1, 2, 3}) {
            const GonConfig g{m};
            const auto pts = enumerate_points(g, 6);
            for (size_t i = 0; i + 1 < pts.size(); ++i)
                CHECK(e.angle(g, pts[i]) < e.angle(g, pts[i + 1]));
            for (const Point& z : pts) {
                CHECK(e.boundary_angle(g, z.copy) < e.angle(g, z));
                CHECK(e.angle(g, z) < e.boundary_angle(g, z.copy + 1));
            }
        }
    }
}

TEST_CASE("maximal length function matches its two defining cases") {
    const Embedding e;
    SUBCASE("accumulation points get a full turn") {
        const GonConfig g{2};
        CHECK(kupisch(g, e, Rat(0)) == full_turn());
        CHECK(kupisch(g, e, Rat(1)) == full_turn());  // second boundary at pi
    }
    SUBCASE("vertex angles get a turn plus the gap to the successor") {
        const GonConfig g{1};
        const Rat s = e.angle(g, Point{1, 0});
        CHECK(kupisch(g, e, s) == full_turn() + e.angle(g, Point{1, 1}) - s);
    }
    SUBCASE("periodicity") {
        const GonConfig g{1};
        const Rat t = e.angle(g, Point{1, 3});
        CHECK(kupisch(g, e, t + full_turn()) == kupisch(g, e, t));
        CHECK(kupisch(g, e, t - Rat(2) * full_turn()) == kupisch(g, e, t));
    }
}

TEST_CASE("maximal length function is monotone in the kupisch sense") {
    for (auto squash : {Embedding::Squash::kHarmonic, Embedding::Squash::kSoft}) {
        const Embedding e(squash);
        for (int m : {1, 3}) {
            const GonConfig g{m};
            // vertex angles, gap midpoints and boundary angles over one turn
            std::vector<Rat> ts;
            for (int p = 1; p <= m; ++p) ts.push_back(e.boundary_angle(g, p));
            const auto pts = enumerate_points(g, 5);
            for (const Point& z : pts) ts.push_back(e.angle(g, z));
            for (const Point& z : pts)
                ts.push_back((e.angle(g, z) + e.angle(g, succ(z))) / Rat(2));
            std::sort(ts.begin(), ts.end());
            for (size_t i = 0; i + 1 < ts.size(); ++i) {
                const Rat lhs = ts[i] + kupisch(g, e, ts[i]);
                const Rat rhs = ts[i + 1] + kupisch(g, e, ts[i + 1]);
                CHECK(lhs <= rhs);
            }
        }
    }
}
