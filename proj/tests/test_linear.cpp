#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "spectral/linear.hpp"
#include "spectral/rng.hpp"

using namespace spectral;

TEST_CASE("matrix basics") {
    imat2 m{2, 0, 4, 2};
    CHECK(m.det() == 4);
    CHECK(m.trace() == 4);
    CHECK(m.transpose() == imat2{2, 4, 0, 2});
    CHECK(m * imat2::identity() == m);
    CHECK(m * ivec2{1, 2} == ivec2{2, 8});
    CHECK(m.adjugate() * m == imat2::diagonal(4, 4));
}

TEST_CASE("expansiveness examples") {
    CHECK(is_expansive(imat2{2, 0, 0, 2}));
    CHECK_FALSE(is_expansive(imat2{2, 1, 2, 2}));   // eigenvalues 2 +- sqrt 2
    CHECK(is_expansive(imat2{2, -1, 2, 2}));        // complex pair, |l|^2 = 6
    CHECK_FALSE(is_expansive(imat2{1, 0, 0, 5}));
    CHECK_FALSE(is_expansive(imat2{0, 0, 0, 0}));
}

TEST_CASE("expansiveness agrees with the eigenvalue oracle on the full box") {
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b)
            for (long c = -6; c <= 6; ++c)
                for (long d = -6; d <= 6; ++d) {
                    imat2 m{a, b, c, d};
                    if (oracles::near_unit_modulus(m)) continue;
                    INFO("matrix [[" << a << "," << b << "],[" << c << "," << d << "]]");
                    CHECK(is_expansive(m) == oracles::expansive_numeric(m));
                }
}

TEST_CASE("rational inverse composes to the identity") {
    rng gen(default_seed);
    int checked = 0;
    while (checked < 300) {
        imat2 m{gen.uniform_int(-20, 20), gen.uniform_int(-20, 20), gen.uniform_int(-20, 20),
                gen.uniform_int(-20, 20)};
        if (m.det() == 0) continue;
        ++checked;
        qmat2 q = to_qmat(m);
        CHECK(q * q.inverse() == qmat2::identity());
        CHECK(q.inverse() * q == qmat2::identity());
    }
    CHECK_THROWS_AS(to_qmat(imat2{1, 2, 2, 4}).inverse(), error);
}

TEST_CASE("norms and conversions") {
    CHECK(inf_norm(qvec2{Rat(-3), Rat(2)}) == 3);
    CHECK(inf_norm(qmat2{Rat(1), Rat(-2), Rat(3), Rat(1) / 2}) == Rat(7) / 2);
    CHECK(to_ivec(qvec2{Rat(4), Rat(-1)}) == ivec2{4, -1});
    CHECK_THROWS_AS(to_ivec(qvec2{Rat(1) / 2, Rat(0)}), error);
    CHECK(to_qmat(imat2{1, 2, 3, 4}).to_imat() == imat2{1, 2, 3, 4});
}
