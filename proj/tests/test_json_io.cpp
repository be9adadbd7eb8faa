#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "spectral/json_io.hpp"

using namespace spectral;

TEST_CASE("instance parsing") {
    auto j = ordered_json::parse(R"({
        "matrix": [[2, 0], [4, 2]],
        "digits": {"alpha": [1, 2], "beta": [3, 8]}
    })");
    problem_instance inst = json_instance(j);
    CHECK(inst.matrix == imat2{2, 0, 4, 2});
    CHECK(inst.digits == digit_set4{1, 2, 3, 8});

    auto big = ordered_json::parse(R"({
        "matrix": [[2, 0], ["123456789012345678901234567890", 2]],
        "digits": {"alpha": [1, 0], "beta": [0, 1]}
    })");
    CHECK(json_instance(big).matrix.c == Int("123456789012345678901234567890"));

    CHECK_THROWS_AS(json_instance(ordered_json::parse(R"({"matrix": [[1,2],[3]]})")), error);
    CHECK_THROWS_AS(json_instance(ordered_json::parse(R"({"matrix": [[1,2],[3,"x"]],
        "digits": {"alpha": [1,0], "beta": [0,1]}})")),
                    error);
    CHECK_THROWS_AS(json_int(ordered_json(1.5)), error);
}

TEST_CASE("decision serialization carries an admissible certificate") {
    decision dec = decide(imat2{2, 0, 4, 2}, digit_set4{1, 2, 3, 8});
    ordered_json j = to_json(dec);
    CHECK(j.at("verdict") == "spectral");
    CHECK(j.at("eta") == 1);
    CHECK(j.at("violations").empty());

    certificate cert = json_certificate(j.at("certificate"));
    CHECK(cert.mbar == dec.cert->mbar);
    CHECK(cert.q_chain == dec.cert->q_chain);
    CHECK(is_admissible(cert.mbar, cert.dbar, cert.cbar));

    decision bad = decide(imat2{2, 0, 2, 2}, digit_set4{1, 0, 0, 2});
    ordered_json jb = to_json(bad);
    CHECK(jb.at("verdict") == "non-spectral");
    CHECK(jb.at("certificate").is_null());
    REQUIRE(jb.at("violations").size() == 1);
    CHECK(jb.at("violations")[0] == "c divisibility: need 4 | 2");
}

TEST_CASE("frequency set round trip keeps exact rationals") {
    decision dec = decide(imat2{2, 0, 4, 2}, digit_set4{1, 0, 0, 2});
    frequency_set fs = tower_spectrum(*dec.cert, 2);
    frequency_set pulled{fs.level, spectrum_pullback(fs.elements, *dec.cert)};
    ordered_json j = to_json(pulled);
    frequency_set back = json_frequency_set(j);
    CHECK(back.level == pulled.level);
    CHECK(back.elements == pulled.elements);
}

TEST_CASE("finite measures serialize with exact atoms") {
    finite_measure_t mu = finite_measure(imat2{2, 0, 0, 2}, digit_set4{1, 0, 0, 1}, 1);
    ordered_json j = to_json(mu);
    CHECK(j.at("weight") == "1/4");
    REQUIRE(j.at("atoms").size() == 4);
    CHECK(j.at("atoms")[1][0] == "1/2");
}

TEST_CASE("rationals serialize as num/den strings") {
    CHECK(to_json(make_rat(-1, 2)) == "-1/2");
    CHECK(to_json(Rat(5)) == "5");
    CHECK(json_rat(ordered_json("7/2")) == make_rat(7, 2));
    CHECK(json_rat(ordered_json(4)) == Rat(4));
}
