// Batch front end: decide | verify | spectrum | zeros | qfun | clique.
// stdout carries machine-readable output only; diagnostics go to stderr.
// Exit codes: 0 pass/spectral, 1 input error, 3 non-spectral,
// 4 verification failure, 5 resource cap.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spectral/clique.hpp"
#include "spectral/json_io.hpp"
#include "spectral/residues.hpp"
#include "spectral/rng.hpp"

namespace {

using namespace spectral;

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_non_spectral = 3;
constexpr int exit_verification_failure = 4;
constexpr int exit_resource_cap = 5;

struct run_config {
    int level = 3;
    int samples = 100;
    std::uint64_t seed = default_seed;
    int radius = 5;
    double tolerance = 1e-9;
    std::string format = "json";
    bool unsafe = false;
    std::string certificate_file;
};

int exit_code_for(errc code) {
    switch (code) {
        case errc::not_spectral: return exit_non_spectral;
        case errc::resource_cap: return exit_resource_cap;
        default: return exit_input_error;
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

ordered_json load_json(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) fail(errc::invalid_input, "cannot open '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        fail(errc::invalid_input, std::string("JSON parse error: ") + e.what());
    }
}

problem_instance load_instance(const ordered_json& j) {
    problem_instance inst = json_instance(j);
    validate(inst.digits);
    if (!is_expansive(inst.matrix)) fail(errc::not_expansive, "matrix is not expansive");
    return inst;
}

// ---- subcommand bodies ------------------------------------------------

int run_decide(const problem_instance& inst, const run_config&) {
    decision dec = decide(inst.matrix, inst.digits);
    std::cout << to_json(dec).dump() << "\n";
    return dec.spectral() ? exit_ok : exit_non_spectral;
}

int run_verify(const problem_instance& inst, const run_config& cfg) {
    decision dec = decide(inst.matrix, inst.digits);
    if (!dec.spectral()) {
        std::cerr << "instance is non-spectral; nothing to verify\n";
        std::cout << to_json(dec).dump() << "\n";
        return exit_non_spectral;
    }
    certificate cert = *dec.cert;
    if (!cfg.certificate_file.empty()) cert = json_certificate(load_json(cfg.certificate_file));

    ordered_json report{{"verdict", "spectral"}, {"level", cfg.level}};
    bool admissible = is_admissible(cert.mbar, cert.dbar, cert.cbar);
    report["admissible"] = admissible;
    if (!admissible) {
        report["pass"] = false;
        std::cout << report.dump() << "\n";
        return exit_verification_failure;
    }

    if (!cfg.unsafe && cfg.level > verify_level_cap)
        fail(errc::level_too_large, "verify level exceeds cap (use --unsafe)");
    frequency_set tower = tower_spectrum(cert, cfg.level, cfg.unsafe);
    tower_check chk = verify_tower_orthogonality(cert, tower, cfg.unsafe);
    report["frequencies"] = tower.elements.size();
    report["pairs_checked"] = chk.pairs;
    report["orthogonality_certified"] = chk.certified;

    rng gen(cfg.seed);
    std::vector<qvec2> pullback = spectrum_pullback(tower.elements, cert);
    double q_dev = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        double x = gen.uniform_real(-5.0, 5.0), y = gen.uniform_real(-5.0, 5.0);
        q_dev = std::max(q_dev,
                         std::abs(q_function(inst.matrix, inst.digits, pullback, x, y, cfg.level)
                                  - 1.0));
    }
    report["qfunction_max_deviation"] = q_dev;

    const canonical_form& cf = dec.canonical;
    residue_system rs = residue_systems(cf, cf.eta);
    std::array<qvec2, 4> picks{rs.t[0][0], rs.t[1][0], rs.t[2][0], rs.t[3][0]};
    double p_dev = 0.0;
    for (int i = 0; i < cfg.samples; ++i) {
        double x = gen.uniform_real(-5.0, 5.0), y = gen.uniform_real(-5.0, 5.0);
        for (const auto& s : rs.s_set)
            p_dev = std::max(p_dev, std::abs(parseval_check(cf, s, picks, x, y) - 1.0));
    }
    report["parseval_max_deviation"] = p_dev;
    report["tolerance"] = cfg.tolerance;

    bool pass = chk.certified && q_dev < cfg.tolerance && p_dev < cfg.tolerance;
    report["pass"] = pass;
    std::cout << report.dump() << "\n";
    return pass ? exit_ok : exit_verification_failure;
}

int run_spectrum(const problem_instance& inst, const run_config& cfg) {
    decision dec = decide(inst.matrix, inst.digits);
    if (!dec.spectral()) {
        std::cerr << "instance is non-spectral; no spectrum exists\n";
        return exit_non_spectral;
    }
    frequency_set tower = tower_spectrum(*dec.cert, cfg.level, cfg.unsafe);
    frequency_set out{tower.level, spectrum_pullback(tower.elements, *dec.cert)};
    if (cfg.format == "csv") {
        std::cout << "x1,x2\n";
        for (const auto& f : out.elements)
            std::cout << format_rat(f.x) << "," << format_rat(f.y) << "\n";
    } else {
        std::cout << to_json(out).dump() << "\n";
    }
    return exit_ok;
}

int run_zeros(const problem_instance& inst, const run_config& cfg) {
    auto [dn, g] = normalize(inst.digits);
    canonical_form cf = canonicalize(inst.matrix, dn);
    auto zeros = zero_enumerate(cf, Rat(cfg.radius));
    std::cout << "x1,x2,theta_class\n";
    for (const auto& z : zeros) {
        theta_result r = theta_classify(cf, z);
        std::cout << format_rat(z.x) << "," << format_rat(z.y) << "," << theta_label(r.kind)
                  << "\n";
    }
    return exit_ok;
}

int run_qfun(const problem_instance& inst, const run_config& cfg) {
    decision dec = decide(inst.matrix, inst.digits);
    if (!dec.spectral()) {
        std::cerr << "instance is non-spectral; no tower spectrum for Q\n";
        return exit_non_spectral;
    }
    frequency_set tower = tower_spectrum(*dec.cert, cfg.level, cfg.unsafe);
    std::vector<qvec2> pullback = spectrum_pullback(tower.elements, *dec.cert);
    std::cout << "xi1,xi2,Q\n";
    int grid = cfg.samples;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            double x = grid > 1 ? -2.0 + 4.0 * i / (grid - 1) : 0.0;
            double y = grid > 1 ? -2.0 + 4.0 * j / (grid - 1) : 0.0;
            double q = q_function(inst.matrix, inst.digits, pullback, x, y, cfg.level);
            std::cout << fmt_double(x) << "," << fmt_double(y) << "," << fmt_double(q) << "\n";
        }
    return exit_ok;
}

int run_clique(const problem_instance& inst, const run_config& cfg) {
    auto [dn, g] = normalize(inst.digits);
    auto clique = orthogonal_clique_search(inst.matrix, dn, cfg.radius, clique_kmax_cap);
    ordered_json freqs = ordered_json::array();
    for (const auto& v : clique) freqs.push_back(to_json(v));
    ordered_json out{{"size", clique.size()}, {"frequencies", freqs}};
    std::cout << out.dump() << "\n";
    return exit_ok;
}

int dispatch(const std::string& cmd, const problem_instance& inst, const run_config& cfg) {
    if (cmd == "decide") return run_decide(inst, cfg);
    if (cmd == "verify") return run_verify(inst, cfg);
    if (cmd == "spectrum") return run_spectrum(inst, cfg);
    if (cmd == "zeros") return run_zeros(inst, cfg);
    if (cmd == "qfun") return run_qfun(inst, cfg);
    if (cmd == "clique") return run_clique(inst, cfg);
    fail(errc::invalid_input, "unknown command " + cmd);
}

int worse(int a, int b) {
    // input error dominates, then caps/verification/non-spectral
    auto rank = [](int c) {
        switch (c) {
            case exit_input_error: return 4;
            case exit_resource_cap: return 3;
            case exit_verification_failure: return 2;
            case exit_non_spectral: return 1;
            default: return 0;
        }
    };
    return rank(a) >= rank(b) ? a : b;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectrality of planar self-affine measures with four digits"};
    app.require_subcommand(1);

    run_config cfg;
    if (const char* env = std::getenv("SPECTRAL_AFFINE_SEED")) {
        try {
            cfg.seed = std::stoull(env, nullptr, 0);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed SPECTRAL_AFFINE_SEED\n";
        }
    }

    std::string instance_path;
    std::string batch_path;

    const char* names[] = {"decide", "verify", "spectrum", "zeros", "qfun", "clique"};
    for (const char* name : names) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("instance", instance_path, "instance JSON file ('-' for stdin)");
        sub->add_option("--file", batch_path, "batch JSON array of instances");
        sub->add_option("--level", cfg.level, "finite level n");
        sub->add_option("--samples", cfg.samples, "sample count / grid side");
        sub->add_option("--seed", cfg.seed, "64-bit RNG seed");
        sub->add_option("--radius", cfg.radius, "box radius");
        sub->add_option("--tolerance", cfg.tolerance, "float diagnostic tolerance");
        sub->add_option("--format", cfg.format, "json|csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--unsafe", cfg.unsafe, "lift resource caps");
        sub->add_option("--certificate-file", cfg.certificate_file,
                        "verify an externally supplied certificate");
    }

    CLI11_PARSE(app, argc, argv);
    std::string cmd = app.get_subcommands().front()->get_name();

    if (cfg.level < 1 || cfg.samples < 1 || cfg.radius < 0 || cfg.tolerance <= 0) {
        std::cerr << "error: InvalidInput: config fields must be positive\n";
        return exit_input_error;
    }
    if (!cfg.unsafe && cfg.level > measure_level_cap) {
        std::cerr << "error: LevelTooLarge: level exceeds cap (use --unsafe)\n";
        return exit_input_error;
    }

    try {
        if (!batch_path.empty()) {
            ordered_json arr = load_json(batch_path);
            if (!arr.is_array()) fail(errc::invalid_input, "--file expects a JSON array");
            int rc = exit_ok;
            for (const auto& item : arr) {
                try {
                    rc = worse(rc, dispatch(cmd, load_instance(item), cfg));
                } catch (const error& e) {
                    std::cerr << "error: " << e.what() << "\n";
                    std::cout << ordered_json{{"error", e.what()}}.dump() << "\n";
                    rc = worse(rc, exit_code_for(e.code()));
                }
            }
            return rc;
        }
        if (instance_path.empty())
            fail(errc::invalid_input, "an instance file (or --file) is required");
        return dispatch(cmd, load_instance(load_json(instance_path)), cfg);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
