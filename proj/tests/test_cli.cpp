#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "spectral/json_io.hpp"

namespace {

struct run_result {
    int exit_code;
    std::string out;
};

// Runs the CLI with stderr squelched; stdout is captured.
run_result run_cli(const std::string& args) {
    std::string cmd = std::string(SPECTRAL_AFFINE_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("cli_tmp_") + name;
    std::ofstream f(path);
    f << content;
    return path;
}

const char* m2_d2 = R"({"matrix": [[2,0],[4,2]], "digits": {"alpha": [1,0], "beta": [0,2]}})";
const char* m1_d2 = R"({"matrix": [[2,0],[2,2]], "digits": {"alpha": [1,0], "beta": [0,2]}})";
const char* id_d1 = R"({"matrix": [[2,0],[0,2]], "digits": {"alpha": [1,0], "beta": [0,1]}})";

} // namespace

TEST_CASE("decide exit codes and verdicts") {
    auto spectral = run_cli("decide " + write_temp("a.json", m2_d2));
    CHECK(spectral.exit_code == 0);
    auto j = spectral::ordered_json::parse(spectral.out);
    CHECK(j.at("verdict") == "spectral");

    auto non = run_cli("decide " + write_temp("b.json", m1_d2));
    CHECK(non.exit_code == 3);
    j = spectral::ordered_json::parse(non.out);
    CHECK(j.at("verdict") == "non-spectral");
    CHECK(j.at("violations")[0] == "c divisibility: need 4 | 2");

    auto garbage = run_cli("decide " + write_temp("c.json", "{not json"));
    CHECK(garbage.exit_code == 1);
    auto missing = run_cli("decide no_such_file.json");
    CHECK(missing.exit_code == 1);
    auto collinear = run_cli(
        "decide " +
        write_temp("d.json",
                   R"({"matrix": [[2,0],[0,2]], "digits": {"alpha": [1,2], "beta": [2,4]}})"));
    CHECK(collinear.exit_code == 1);
}

TEST_CASE("decide output is byte-stable") {
    std::string path = write_temp("stable.json", m2_d2);
    auto first = run_cli("decide " + path);
    auto second = run_cli("decide " + path);
    CHECK(first.out == second.out);
    CHECK(first.exit_code == second.exit_code);
}

TEST_CASE("verify passes on spectral instances") {
    auto res = run_cli("verify --level 3 " + write_temp("v.json", id_d1));
    CHECK(res.exit_code == 0);
    auto j = spectral::ordered_json::parse(res.out);
    CHECK(j.at("pass") == true);
    CHECK(j.at("admissible") == true);
    CHECK(j.at("orthogonality_certified") == true);
    CHECK(j.at("qfunction_max_deviation").get<double>() < 1e-9);
    CHECK(j.at("parseval_max_deviation").get<double>() < 1e-9);

    auto non = run_cli("verify " + write_temp("vn.json", m1_d2));
    CHECK(non.exit_code == 3);

    const char* ex43 =
        R"({"matrix": [[2,0],[4,2]], "digits": {"alpha": [1,2], "beta": [3,8]}})";
    auto deep = run_cli("verify --level 2 " + write_temp("v43.json", ex43));
    CHECK(deep.exit_code == 0);
    CHECK(spectral::ordered_json::parse(deep.out).at("pass") == true);
}

TEST_CASE("verify rejects a corrupted certificate file") {
    // valid shape, wrong content: Cbar collapsed to repeated zeros
    const char* corrupt = R"({
        "Q_chain": [["1","0"],["0","1"]],
        "Mbar": [["2","0"],["0","2"]],
        "Dbar": {"alpha": ["1","0"], "beta": ["0","1"]},
        "Cbar": [["0","0"],["0","0"],["0","0"],["0","0"]]
    })";
    std::string cert = write_temp("cert.json", corrupt);
    auto res = run_cli("verify --certificate-file " + cert + " " + write_temp("vc.json", id_d1));
    CHECK(res.exit_code == 4);
    auto j = spectral::ordered_json::parse(res.out);
    CHECK(j.at("admissible") == false);
}

TEST_CASE("spectrum output re-verifies after re-ingestion") {
    std::string path = write_temp("s.json", m2_d2);
    auto res = run_cli("spectrum --level 2 " + path);
    REQUIRE(res.exit_code == 0);
    auto fs = spectral::json_frequency_set(spectral::ordered_json::parse(res.out));
    REQUIRE(fs.elements.size() == 16);

    spectral::imat2 m{2, 0, 4, 2};
    spectral::digit_set4 d{1, 0, 0, 2};
    spectral::muhat_scanner scanner(m, d);
    for (size_t i = 0; i < fs.elements.size(); ++i)
        for (size_t j2 = i + 1; j2 < fs.elements.size(); ++j2)
            CHECK(scanner.is_zero(fs.elements[i] - fs.elements[j2]));

    auto csv = run_cli("spectrum --level 2 --format csv " + path);
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.substr(0, 6) == "x1,x2\n");

    auto non = run_cli("spectrum " + write_temp("sn.json", m1_d2));
    CHECK(non.exit_code == 3);
}

TEST_CASE("zeros CSV carries classified points") {
    auto res = run_cli("zeros --radius 1 " + write_temp("z.json", id_d1));
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("x1,x2,theta_class") == 0);
    CHECK(res.out.find("1/2,0,Theta1") != std::string::npos);
    CHECK(res.out.find("0,1/2,Theta2") != std::string::npos);
    CHECK(res.out.find("1/2,1/2,Theta3") != std::string::npos);

    auto empty = run_cli("zeros --radius 0 " + write_temp("z0.json", id_d1));
    CHECK(empty.out == "x1,x2,theta_class\n");
}

TEST_CASE("qfun emits a three-column grid near one") {
    auto res = run_cli("qfun --level 2 --samples 4 " + write_temp("q.json", id_d1));
    CHECK(res.exit_code == 0);
    std::istringstream in(res.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "xi1,xi2,Q");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        auto c1 = line.find(','), c2 = line.rfind(',');
        REQUIRE(c1 != std::string::npos);
        REQUIRE(c2 > c1);
        double q = std::stod(line.substr(c2 + 1));
        CHECK(std::abs(q - 1.0) < 1e-9);
    }
    CHECK(rows == 16);
}

TEST_CASE("clique command and resource cap") {
    auto res = run_cli("clique --radius 2 " + write_temp("k.json", id_d1));
    CHECK(res.exit_code == 0);
    auto j = spectral::ordered_json::parse(res.out);
    CHECK(j.at("size").get<size_t>() == j.at("frequencies").size());
    CHECK(j.at("size").get<size_t>() >= 16);

    auto capped = run_cli("clique --radius 31 " + write_temp("k2.json", id_d1));
    CHECK(capped.exit_code == 5);
}

TEST_CASE("batch mode emits one line per instance") {
    std::string batch = write_temp("batch.json", std::string("[") + m2_d2 + "," + m1_d2 + "]");
    auto res = run_cli("decide --file " + batch);
    CHECK(res.exit_code == 3); // one instance is non-spectral
    size_t lines = std::count(res.out.begin(), res.out.end(), '\n');
    CHECK(lines == 2);

    auto res2 = run_cli("decide --file " + batch);
    CHECK(res2.out == res.out);
}

TEST_CASE("seed environment variable changes sampling but not verdicts") {
    std::string path = write_temp("seed.json", id_d1);
    std::string base = std::string(SPECTRAL_AFFINE_BIN);
    auto with_env = [&](const std::string& env) {
        std::string cmd = env + " " + base + " verify --level 2 " + path + " 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        char buf[4096];
        size_t got;
        while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
        pclose(pipe);
        return out;
    };
    std::string a = with_env("SPECTRAL_AFFINE_SEED=1");
    std::string b = with_env("SPECTRAL_AFFINE_SEED=1");
    std::string c = with_env("SPECTRAL_AFFINE_SEED=2");
    CHECK(a == b);
    CHECK(a != c); // deviations sampled at different points
    CHECK(spectral::ordered_json::parse(a).at("pass") == true);
    CHECK(spectral::ordered_json::parse(c).at("pass") == true);

    // an explicit --seed wins over the environment
    auto flag = run_cli("verify --level 2 --seed 2 " + path);
    CHECK(flag.out == c);
    std::string cmd = "SPECTRAL_AFFINE_SEED=1 " + base + " verify --level 2 --seed 2 " + path +
                      " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string masked;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) masked.append(buf, got);
    pclose(pipe);
    CHECK(masked == c);
}

TEST_CASE("unsafe flag gates levels beyond the cap") {
    std::string path = write_temp("lvl.json", id_d1);
    auto blocked = run_cli("spectrum --level 9 " + path);
    CHECK(blocked.exit_code == 1);
    auto verify_blocked = run_cli("verify --level 6 " + path);
    CHECK(verify_blocked.exit_code == 1);

    auto lifted = run_cli("spectrum --level 6 --unsafe " + path);
    CHECK(lifted.exit_code == 0);
    auto j = spectral::ordered_json::parse(lifted.out);
    CHECK(j.at("count").get<size_t>() == 4096);
}
