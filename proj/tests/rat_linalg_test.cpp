#include <random>

#include "doctest.h"
#include "focal/linalg.hpp"

using namespace focal;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rat("3/6") == rat(1, 2));
    CHECK(parse_rat("-4/2") == rat(-2));
    CHECK(parse_rat("7") == rat(7));
    CHECK(rat_str(rat(1, 2)) == "1/2");
    CHECK(rat_str(rat(-6, 4)) == "-3/2");
    CHECK(rat_str(rat(5)) == "5");
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("a/2"), ParseError);
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
}

TEST_CASE("floor/ceil/round") {
    CHECK(floor_int(rat(7, 2)) == 3);
    CHECK(floor_int(rat(-7, 2)) == -4);
    CHECK(ceil_int(rat(7, 2)) == 4);
    CHECK(ceil_int(rat(-7, 2)) == -3);
    CHECK(round_int(rat(5, 4)) == 1);
    CHECK(round_int(rat(7, 4)) == 2);
    CHECK(round_int(rat(-5, 4)) == -1);
}

TEST_CASE("integer_interval matches brute force") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 7);
    for (int trial = 0; trial < 3000; ++trial) {
        Rat a = rat(num(rng), den(rng));
        Rat r2 = rat(num(rng), den(rng));
        auto iv = integer_interval(a, r2);
        long lo_bf = 1, hi_bf = 0;
        bool any = false;
        for (long x = -60; x <= 60; ++x) {
            Rat d = rat(x) - a;
            if (d * d <= r2) {
                if (!any) lo_bf = x;
                hi_bf = x;
                any = true;
            }
        }
        if (!any) {
            CHECK(!iv.has_value());
        } else {
            REQUIRE(iv.has_value());
            CHECK(iv->first == lo_bf);
            CHECK(iv->second == hi_bf);
        }
    }
}

TEST_CASE("rref is canonical and rank is right") {
    Mat m = {{rat(2), rat(4)}, {rat(1), rat(2)}};
    Rref r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.rows[0] == Vec{rat(1), rat(2)});

    // Same row space, different presentation -> same RREF.
    Mat m2 = {{rat(3), rat(6)}, {rat(-5), rat(-10)}};
    CHECK(rref(m2).rows == r.rows);

    CHECK(mat_rank(identity_mat(4)) == 4);
    CHECK(mat_rank(Mat{{rat(0), rat(0)}}) == 0);
}

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> d(-5, 5);
    auto cofactor_det = [](const Mat& m, auto&& self) -> Rat {
        const int n = static_cast<int>(m.size());
        if (n == 1) return m[0][0];
        Rat acc(0);
        for (int j = 0; j < n; ++j) {
            Mat minor;
            for (int i = 1; i < n; ++i) {
                Vec row;
                for (int k = 0; k < n; ++k)
                    if (k != j) row.push_back(m[i][k]);
                minor.push_back(row);
            }
            Rat term = m[0][j] * self(minor, self);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Mat m(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = rat(d(rng), 1 + static_cast<long>(rng() % 3));
        CHECK(determinant(m) == cofactor_det(m, cofactor_det));
    }
}

TEST_CASE("solve_affine: particular + kernel describe the solution set") {
    Mat a = {{rat(1), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    Vec b = {rat(3), rat(5)};
    auto sol = solve_affine(a, b);
    REQUIRE(sol.has_value());
    CHECK(mat_vec(a, sol->point) == b);
    CHECK(sol->kernel.size() == 1);
    CHECK(is_zero_vec(mat_vec(a, sol->kernel[0])));

    // Inconsistent system.
    Mat a2 = {{rat(1), rat(0)}, {rat(2), rat(0)}};
    CHECK(!solve_affine(a2, {rat(1), rat(1)}).has_value());
}

TEST_CASE("inverse round-trips") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-6, 6);
    int done = 0;
    while (done < 50) {
        int n = 1 + static_cast<int>(rng() % 4);
        Mat m(n, Vec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = rat(d(rng));
        if (determinant(m) == 0) continue;
        CHECK(mat_mul(m, inverse(m)) == identity_mat(n));
        ++done;
    }
    CHECK_THROWS_AS(inverse(Mat{{rat(1), rat(2)}, {rat(2), rat(4)}}), SingularMatrixError);
}

TEST_CASE("ldlt factors positive definite matrices and flags failures") {
    Mat g = {{rat(2), rat(1)}, {rat(1), rat(2)}};
    auto f = ldlt(g);
    REQUIRE(f.factor.has_value());
    // Reassemble L D L^T.
    const auto& l = f.factor->lower;
    const auto& d = f.factor->diag;
    Mat ld(2, Vec(2, Rat(0)));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) ld[i][j] += l[i][k] * d[k] * l[j][k];
    CHECK(ld == g);

    auto bad = ldlt(Mat{{rat(1), rat(2)}, {rat(2), rat(1)}});
    CHECK(!bad.factor.has_value());
    CHECK(bad.failing_minor == 2);
}

TEST_CASE("positive definiteness gate agrees with a determinant-sign oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> d(-4, 4);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 1 + static_cast<int>(rng() % 4);
        Mat s(n, Vec(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                Rat v = rat(d(rng));
                s[i][j] = v;
                s[j][i] = v;
            }
        bool oracle_pd = true;
        for (int k = 1; k <= n && oracle_pd; ++k) {
            Mat lead(k, Vec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) lead[i][j] = s[i][j];
            if (sgn(determinant(lead)) <= 0) oracle_pd = false;
        }
        CHECK(ldlt(s).factor.has_value() == oracle_pd);
    }
}
