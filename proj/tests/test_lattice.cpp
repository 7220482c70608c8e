#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "support/minklen_oracle.hpp"
#include "toric/lattice.hpp"

using namespace toric;

static PointSet figure1_S() {
    return {{3, 0}, {4, 1}, {0, 2}, {1, 2}, {2, 2}, {0, 3},
            {1, 3}, {4, 3}, {5, 3}, {0, 4}, {2, 4}, {4, 5}};
}

static PointSet figure2_S() {
    return {{0, 0}, {1, 0}, {2, 0}, {1, 1}, {3, 1}, {2, 2}, {1, 4}};
}

static Polygon T0() { return convex_hull({{0, 0}, {1, 2}, {2, 1}}); }

TEST_CASE("convex hull basics") {
    Polygon pt = convex_hull({{0, 0}});
    CHECK(pt.dim == 0);

    Polygon quad = convex_hull(figure2_S());
    CHECK(quad.dim == 2);
    CHECK(quad.verts == std::vector<Pt>{{0, 0}, {2, 0}, {3, 1}, {1, 4}});

    Polygon seg = convex_hull({{0, 0}, {1, 2}, {2, 4}});
    CHECK(seg.dim == 1);
    CHECK(seg.verts == std::vector<Pt>{{0, 0}, {2, 4}});

    CHECK_THROWS_AS(convex_hull({}), std::invalid_argument);
}

TEST_CASE("convex hull is idempotent and contains its input") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        PointSet pts;
        int n = 1 + static_cast<int>(rng() % 9);
        for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
        Polygon H = convex_hull(pts);
        Polygon H2 = convex_hull(H.verts);
        CHECK(H.verts == H2.verts);
        PointSet lp = lattice_points(H);
        for (Pt p : pts)
            CHECK(std::find(lp.begin(), lp.end(), p) != lp.end());
    }
}

TEST_CASE("lattice point counts from the figures") {
    CHECK(lattice_points(convex_hull(figure1_S())).size() == 21);
    Polygon fig2 = convex_hull(figure2_S());
    PointSet lp = lattice_points(fig2);
    CHECK(lp.size() == 10);
    for (Pt p : {Pt{2, 1}, Pt{1, 2}, Pt{1, 3}})
        CHECK(std::find(lp.begin(), lp.end(), p) != lp.end());
    CHECK(lattice_points(convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).size() == 4);
}

TEST_CASE("Minkowski sums") {
    Polygon I = convex_hull({{0, 0}, {1, 0}});
    Polygon fig4 = minkowski_sum(T0(), I);
    PointSet lp = sorted_unique(lattice_points(fig4));
    CHECK(lp == PointSet{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}});

    // P + point translates P
    Polygon P = convex_hull(figure2_S());
    Polygon shifted = minkowski_sum(P, convex_hull({{2, 3}}));
    CHECK(shifted.verts == P.translated({2, 3}).verts);

    // 4 horizontal + 2 vertical primitive segments give a 4x2 rectangle
    Polygon sum = convex_hull({{0, 0}});
    Polygon Iy = convex_hull({{0, 0}, {0, 1}});
    for (int i = 0; i < 4; ++i) sum = minkowski_sum(sum, I);
    for (int i = 0; i < 2; ++i) sum = minkowski_sum(sum, Iy);
    CHECK(sum.verts == convex_hull({{0, 0}, {4, 0}, {4, 2}, {0, 2}}).verts);
}

TEST_CASE("Minkowski sum is commutative and associative") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> d(0, 4);
    auto rand_poly = [&] {
        PointSet pts;
        int n = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
        return convex_hull(pts);
    };
    for (int trial = 0; trial < 200; ++trial) {
        Polygon A = rand_poly(), B = rand_poly(), C = rand_poly();
        CHECK(minkowski_sum(A, B).verts == minkowski_sum(B, A).verts);
        CHECK(minkowski_sum(minkowski_sum(A, B), C).verts ==
              minkowski_sum(A, minkowski_sum(B, C)).verts);
    }
}

TEST_CASE("Pick's theorem on random polygons") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<long> d(0, 7);
    for (int trial = 0; trial < 200; ++trial) {
        PointSet pts;
        for (int i = 0; i < 6; ++i) pts.push_back({d(rng), d(rng)});
        Polygon P = convex_hull(pts);
        if (P.dim != 2) continue;
        long boundary = 0;
        const int n = static_cast<int>(P.verts.size());
        for (int i = 0; i < n; ++i) {
            Pt e = P.verts[(i + 1) % n] - P.verts[i];
            boundary += std::gcd(std::abs(e.x), std::abs(e.y));
        }
        long interior = static_cast<long>(lattice_points(P).size()) - boundary;
        CHECK(P.area2() == 2 * interior + boundary - 2);
    }
}

TEST_CASE("exceptional triangle recognition") {
    auto id = is_exceptional_triangle(T0());
    REQUIRE(id.has_value());
    CHECK(id->m == std::array<long, 4>{1, 0, 0, 1});
    CHECK(id->t == Pt{0, 0});

    CHECK(is_exceptional_triangle(convex_hull({{0, 0}, {2, 1}, {1, 2}})).has_value());
    CHECK_FALSE(is_exceptional_triangle(convex_hull({{0, 0}, {1, 0}, {0, 1}})).has_value());

    // random unimodular images are recognized and mapped back correctly
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        long a = 1 + static_cast<long>(rng() % 3), b = static_cast<long>(rng() % 3);
        long c = static_cast<long>(rng() % 3);
        long dd = (1 + b * c) % a == 0 ? (1 + b * c) / a : -1;
        if (dd < 0 || a * dd - b * c != 1) continue;
        UniModMap M{{a, b, c, dd}, {static_cast<long>(rng() % 5), static_cast<long>(rng() % 5)}};
        PointSet img;
        for (Pt v : t0_vertices()) img.push_back(M.apply(v));
        auto found = is_exceptional_triangle(convex_hull(img));
        REQUIRE(found.has_value());
        PointSet img2;
        for (Pt v : t0_vertices()) img2.push_back(found->apply(v));
        CHECK(sorted_unique(img2) == sorted_unique(img));
    }
}

TEST_CASE("Minkowski length of the figure 1 polygon") {
    Polygon P = convex_hull(figure1_S());
    auto r = minkowski_length(P);
    CHECK(r.length == 6);
    CHECK_FALSE(r.any_t0);
    auto qs = r.distinct_sums();
    REQUIRE(qs.size() == 1);
    CHECK(qs[0].verts == convex_hull({{0, 0}, {4, 0}, {4, 2}, {0, 2}}).verts);
    REQUIRE(r.decompositions.size() == 1);
    const auto& dec = r.decompositions[0];
    CHECK(dec.translation == Pt{0, 2});
    int horiz = 0, vert = 0;
    for (const auto& s : dec.summands) {
        if (s.dir == Pt{1, 0}) ++horiz;
        if (s.dir == Pt{0, 1}) ++vert;
    }
    CHECK(horiz == 4);
    CHECK(vert == 2);
}

TEST_CASE("Minkowski length of the figure 2 quadrilateral") {
    Polygon P = convex_hull(figure2_S());
    auto r = minkowski_length(P);
    CHECK(r.length == 4);
    CHECK_FALSE(r.any_t0);
    auto qs = r.distinct_sums();
    REQUIRE(qs.size() == 1);
    CHECK(qs[0].verts == std::vector<Pt>{{0, 0}, {0, 4}});
    CHECK(r.decompositions[0].translation == Pt{1, 0});
}

TEST_CASE("Minkowski length of segments and T0") {
    Polygon seg = convex_hull({{1, 1}, {7, 4}});
    auto r = minkowski_length(seg);
    CHECK(r.length == 3);

    auto rt = minkowski_length(T0());
    CHECK(rt.length == 1);

    Polygon fig4 = minkowski_sum(T0(), convex_hull({{0, 0}, {1, 0}}));
    auto rf = minkowski_length(fig4);
    CHECK(rf.length == 2);
    CHECK(rf.any_t0);
    bool saw_t0_plus_seg = false, saw_two_vertical = false;
    for (const auto& dec : rf.decompositions) {
        if (dec.has_t0()) saw_t0_plus_seg = true;
        if (dec.summands.size() == 2 && dec.summands[0].dir == Pt{0, 1} &&
            dec.summands[1].dir == Pt{0, 1})
            saw_two_vertical = true;
    }
    CHECK(saw_t0_plus_seg);
    CHECK(saw_two_vertical);

    CHECK_THROWS_AS(minkowski_length(convex_hull({{1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(minkowski_length(convex_hull({{0, 0}, {20, 0}, {0, 20}})),
                    std::invalid_argument);
}

TEST_CASE("lower bounds from L(P)") {
    // figure 2 at q = 9: no T0 summand, bound (7)
    CHECK(ss_lower_bound(4, 9).without_t0 == 32);
    // figure 4 at q = 13: T0 summand present, bound (6)
    CHECK(ss_lower_bound(2, 13).with_t0 == 114);
    for (long q : {5L, 9L, 16L, 25L, 100L}) {
        SSBounds b = ss_lower_bound(3, q);
        long isq = static_cast<long>(std::floor(2 * std::sqrt(static_cast<double>(q))));
        CHECK(b.without_t0 - b.with_t0 == isq - 1);
    }
}

TEST_CASE("Minkowski length agrees with the naive oracle on small polygons") {
    std::vector<Polygon> cases = {
        T0(),
        minkowski_sum(T0(), convex_hull({{0, 0}, {1, 0}})),
        convex_hull({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
        convex_hull({{0, 0}, {3, 0}, {3, 1}, {0, 1}}),
        convex_hull({{0, 0}, {2, 0}, {0, 2}}),
        convex_hull({{0, 0}, {1, 3}, {3, 1}}),
    };
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> d(0, 4);
    while (cases.size() < 24) {
        PointSet pts;
        for (int i = 0; i < 5; ++i) pts.push_back({d(rng), d(rng)});
        Polygon P = convex_hull(pts);
        if (P.dim < 1 || lattice_points(P).size() > 14) continue;
        cases.push_back(P);
    }
    for (const Polygon& P : cases) {
        INFO("polygon " << oracle::key_of(P));
        CHECK(minkowski_length(P).length == oracle::minkowski_length_naive(P));
    }
}

TEST_CASE("L is monotone and superadditive") {
    std::mt19937 rng(808);
    std::uniform_int_distribution<long> d(0, 4);
    auto rand_poly = [&] {
        while (true) {
            PointSet pts;
            for (int i = 0; i < 4; ++i) pts.push_back({d(rng), d(rng)});
            Polygon P = convex_hull(pts);
            if (P.dim >= 1) return P;
        }
    };
    for (int trial = 0; trial < 30; ++trial) {
        Polygon A = rand_poly(), B = rand_poly();
        long la = minkowski_length(A).length;
        long lb = minkowski_length(B).length;
        CHECK(minkowski_length(minkowski_sum(A, B)).length >= la + lb);

        // subpolygon monotonicity
        PointSet lp = lattice_points(A);
        PointSet sub;
        for (Pt p : lp)
            if (rng() % 2) sub.push_back(p);
        if (sub.size() >= 2) {
            Polygon Q = convex_hull(sub);
            if (Q.dim >= 1) CHECK(minkowski_length(Q).length <= la);
        }
    }
}

TEST_CASE("L is invariant under unimodular affine maps") {
    std::vector<UniModMap> maps = {
        {{0, -1, 1, 0}, {3, 0}},   // rotation
        {{1, 1, 0, 1}, {0, 2}},    // shear
        {{1, 0, 1, -1}, {1, 1}},   // reflection composite
    };
    std::vector<Polygon> cases = {
        convex_hull(figure2_S()),
        T0(),
        minkowski_sum(T0(), convex_hull({{0, 0}, {1, 0}})),
        convex_hull({{0, 0}, {3, 0}, {3, 2}, {0, 2}}),
    };
    for (const Polygon& P : cases) {
        auto r = minkowski_length(P);
        for (const UniModMap& M : maps) {
            PointSet img;
            for (Pt v : P.verts) img.push_back(M.apply(v));
            Polygon PM = convex_hull(img);
            if (PM.width_x() > 12 || PM.width_y() > 12) continue;
            auto rm = minkowski_length(PM);
            CHECK(rm.length == r.length);
            CHECK(rm.decompositions.size() == r.decompositions.size());
            CHECK(rm.any_t0 == r.any_t0);
        }
    }
}
