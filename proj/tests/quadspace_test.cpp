#include <random>

#include "doctest.h"
#include "focal/focal.hpp"
#include "oracles.hpp"

using namespace focal;

namespace {
GramForm id2() { return GramForm(identity_mat(2)); }
GramForm skew2() { return GramForm({{rat(2), rat(1)}, {rat(1), rat(2)}}); }
}  // namespace

TEST_CASE("inner products") {
    CHECK(inner({rat(1), rat(0)}, {rat(0), rat(1)}, id2()) == 0);
    CHECK(inner({rat(1), rat(0)}, {rat(1), rat(0)}, skew2()) == 2);
    CHECK(inner({rat(1), rat(0)}, {rat(0), rat(1)}, skew2()) == 1);
    CHECK_THROWS_AS(inner({rat(1)}, {rat(0), rat(1)}, id2()), DimensionMismatch);
}

TEST_CASE("dist2") {
    CHECK(dist2({rat(1, 2), rat(1, 2)}, {rat(1), rat(1)}, id2()) == rat(1, 2));
    CHECK(dist2({rat(3, 7), rat(-2, 5)}, {rat(3, 7), rat(-2, 5)}, skew2()) == 0);
    CHECK(dist2({rat(1), rat(0)}, {rat(0), rat(1)}, skew2()) == 2);
}

TEST_CASE("GramForm rejects bad input") {
    CHECK_THROWS_AS(GramForm({{rat(1), rat(2)}, {rat(3), rat(4)}}), NotSymmetricError);
    try {
        GramForm({{rat(1), rat(2)}, {rat(2), rat(1)}});
        FAIL("expected NotPositiveDefiniteError");
    } catch (const NotPositiveDefiniteError& e) {
        CHECK(e.minor_index == 2);
    }
    try {
        GramForm({{rat(-1)}});
        FAIL("expected NotPositiveDefiniteError");
    } catch (const NotPositiveDefiniteError& e) {
        CHECK(e.minor_index == 1);
    }
}

TEST_CASE("flat_intersection in Z2") {
    Lattice z2 = catalog("Z2");
    auto plane = [&](long a, long b) { return BPlane::of(z2, LatticePoint{{a, b}}); };

    SUBCASE("one plane: the line x = 1/2") {
        std::vector<BPlane> ps = {plane(1, 0)};
        auto flat = flat_intersection(ps, z2.gram());
        REQUIRE(flat.has_value());
        CHECK(flat->codim == 1);
        CHECK(flat->dim() == 1);
        CHECK(flat->base[0] == rat(1, 2));
        // every point of the flat has x = 1/2
        CHECK(flat->directions[0][0] == 0);
    }
    SUBCASE("two planes: the corner point") {
        std::vector<BPlane> ps = {plane(1, 0), plane(0, 1)};
        auto flat = flat_intersection(ps, z2.gram());
        REQUIRE(flat.has_value());
        CHECK(flat->codim == 2);
        CHECK(flat->base == Vec{rat(1, 2), rat(1, 2)});
        CHECK(flat->directions.empty());
    }
    SUBCASE("parallel planes: empty") {
        std::vector<BPlane> ps = {plane(1, 0), plane(2, 0)};
        CHECK(!flat_intersection(ps, z2.gram()).has_value());
    }
    SUBCASE("codim equals the rank of the lambda span") {
        std::vector<BPlane> ps = {plane(1, 0), plane(0, 1), plane(1, 1)};
        auto flat = flat_intersection(ps, z2.gram());
        REQUIRE(flat.has_value());  // all three pass through (1/2, 1/2)
        Mat lambdas = {{rat(1), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(1)}};
        CHECK(flat->codim == mat_rank(lambdas));
    }
}

TEST_CASE("foot_of_origin") {
    SUBCASE("line x = 1/2 under the identity form") {
        auto flat = AffineFlat::make({rat(1, 2), rat(0)}, {{rat(0), rat(1)}}, 2);
        auto [p, r2] = foot_of_origin(flat, id2());
        CHECK(p == Vec{rat(1, 2), rat(0)});
        CHECK(r2 == rat(1, 4));
    }
    SUBCASE("point flat") {
        auto flat = AffineFlat::make({rat(1, 2), rat(1, 2)}, {}, 2);
        auto [p, r2] = foot_of_origin(flat, id2());
        CHECK(p == Vec{rat(1, 2), rat(1, 2)});
        CHECK(r2 == rat(1, 2));
    }
    SUBCASE("line x = 1/2 under the skew form, checked by a 1-D scan") {
        auto flat = AffineFlat::make({rat(1, 2), rat(0)}, {{rat(0), rat(1)}}, 2);
        GramForm g = skew2();
        auto [p, r2] = foot_of_origin(flat, g);
        CHECK(p == Vec{rat(1, 2), rat(-1, 4)});
        CHECK(r2 == rat(3, 8));
        // scan oracle: no grid point on the line beats the foot
        for (long k = -64; k <= 64; ++k) {
            Vec q = {rat(1, 2), rat(k, 16)};
            CHECK(norm2(q, g) >= r2);
        }
    }
    SUBCASE("foot is G-orthogonal to every direction, from every flat point") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 2 + static_cast<int>(rng() % 3);
            GramForm g(oracles::random_pd_gram(rng, n, 3));
            Vec base = oracles::random_rational_point(rng, n, 6, 4);
            std::vector<Vec> dirs;
            int want = 1 + static_cast<int>(rng() % (n - 1));
            while (static_cast<int>(dirs.size()) < want) {
                Vec d = oracles::random_rational_point(rng, n, 3, 2);
                Mat test;
                for (const Vec& e : dirs) test.push_back(e);
                test.push_back(d);
                if (mat_rank(test) == static_cast<int>(test.size())) dirs.push_back(d);
            }
            auto flat = AffineFlat::make(base, dirs, n);
            auto [p, r2] = foot_of_origin(flat, g);
            CHECK(norm2(p, g) == r2);
            // 0 - p is G-orthogonal to the flat, and p minimizes the norm
            for (const Vec& d : flat.directions) CHECK(inner(p, d, g) == 0);
            for (int s = 0; s < 5; ++s) {
                Vec q = p;
                for (const Vec& d : flat.directions)
                    q = vec_add(q, vec_scale(rat(static_cast<long>(rng() % 9) - 4, 2), d));
                CHECK(norm2(q, g) >= r2);
            }
        }
    }
}

TEST_CASE("AffineFlat rejects dependent directions") {
    CHECK_THROWS(AffineFlat::make({rat(0), rat(0)}, {{rat(1), rat(0)}, {rat(2), rat(0)}}, 2));
}
