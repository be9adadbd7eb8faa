#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "spectral/numbers.hpp"
#include "spectral/rng.hpp"

using namespace spectral;

TEST_CASE("gcd4 basic values") {
    CHECK(gcd4(1, 2, 3, 8) == 1);
    CHECK(gcd4(2, 4, 6, 8) == 2);
    CHECK(gcd4(-6, 10, 15, 0) == oracles::binary_gcd4(-6, 10, 15, 0));
    CHECK(gcd4(-6, 10, 15, 0) == 1);
    CHECK_THROWS_AS(gcd4(0, 0, 0, 0), error);
}

TEST_CASE("gcd4 scaling homogeneity") {
    rng gen(default_seed);
    for (int iter = 0; iter < 500; ++iter) {
        Int a1 = gen.uniform_int(-50, 50), a2 = gen.uniform_int(-50, 50);
        Int b1 = gen.uniform_int(-50, 50), b2 = gen.uniform_int(-50, 50);
        if (a1 == 0 && a2 == 0 && b1 == 0 && b2 == 0) continue;
        Int k = gen.uniform_int(1, 20) * (gen.uniform_int(0, 1) ? 1 : -1);
        CHECK(gcd4(k * a1, k * a2, k * b1, k * b2) == iabs(k) * gcd4(a1, a2, b1, b2));
        CHECK(gcd4(a1, a2, b1, b2) == oracles::binary_gcd4(a1, a2, b1, b2));
    }
}

TEST_CASE("bezout canonical values") {
    auto r = bezout(1, 0);
    CHECK((r.g == 1 && r.p == 1 && r.q == 0));
    r = bezout(1, 2);
    CHECK((r.g == 1 && r.p == 1 && r.q == 0));
    r = bezout(3, 5);
    CHECK((r.g == 1 && r.p == 2 && r.q == -1));
    CHECK(r.p * 3 + r.q * 5 == 1);
    CHECK_THROWS_AS(bezout(0, 0), error);
}

TEST_CASE("bezout identity and minimality on random pairs") {
    rng gen(default_seed);
    for (int iter = 0; iter < 10000; ++iter) {
        Int t1 = gen.uniform_int(-1000000000L, 1000000000L);
        Int t2 = gen.uniform_int(-1000000000L, 1000000000L);
        if (t1 == 0 && t2 == 0) continue;
        auto r = bezout(t1, t2);
        REQUIRE(r.g > 0);
        REQUIRE(r.p * t1 + r.q * t2 == r.g);
        Int og, ox, oy;
        oracles::xgcd(t1, t2, og, ox, oy);
        CHECK(r.g == og);
        if (t1 != 0) {
            // no valid q is strictly smaller in magnitude, ties go nonnegative
            Int step = iabs(t1 / r.g);
            CHECK(2 * iabs(r.q) <= step);
            if (2 * iabs(r.q) == step) CHECK(r.q >= 0);
        }
    }
}

TEST_CASE("split_pow2") {
    auto [e0, g0] = split_pow2(Int(1));
    CHECK((e0 == 0 && g0 == 1));
    auto [e1, g1] = split_pow2(Int(2));
    CHECK((e1 == 1 && g1 == 1));
    auto [e2, g2] = split_pow2(Int(-24));
    CHECK((e2 == 3 && g2 == -3));
    CHECK_THROWS_AS(split_pow2(Int(0)), error);
}

TEST_CASE("floor division helpers") {
    CHECK(mod_floor(-7, 3) == 2);
    CHECK(mod_floor(7, 3) == 1);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(rat_floor(Rat(-1) / 2) == -1);
    CHECK(rat_ceil(Rat(-1) / 2) == 0);
    CHECK(rat_floor(Rat(3)) == 3);
}

TEST_CASE("rational formatting round trip") {
    CHECK(format_rat(make_rat(1, 2)) == "1/2");
    CHECK(format_rat(make_rat(4, 2)) == "2");
    CHECK(format_rat(make_rat(-3, 6)) == "-1/2");
    CHECK(format_rat(make_rat(3, -6)) == "-1/2");
    CHECK(format_rat(Rat(0)) == "0");
    CHECK(parse_rat("7") == Rat(7));
    CHECK(parse_rat("-5/10") == make_rat(-1, 2));
    CHECK_THROWS_AS(parse_rat("x/y"), error);
    CHECK_THROWS_AS(make_rat(1, 0), error);

    rng gen(default_seed);
    for (int iter = 0; iter < 200; ++iter) {
        Rat r = make_rat(gen.uniform_int(-5000, 5000), gen.uniform_int(1, 999));
        CHECK(parse_rat(format_rat(r)) == r);
    }
}
