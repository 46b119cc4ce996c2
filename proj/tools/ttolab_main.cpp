#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ttolab/harness.hpp"

namespace {

using ttolab::Json;

// Stdout is written once, at the end, so partial output never leaks.
int emit(const Json& j, const std::string& out_path, int code) {
    const std::string text = j.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw ttolab::InvalidArgument("cannot open output file: " + out_path);
        f << text;
    }
    std::cout << text << std::flush;
    return code;
}

int verdict_exit(const std::string& verdict) {
    if (verdict == "pass") return 0;
    if (verdict == "fail") return 1;
    return 3;
}

ttolab::Complex to_complex(const std::vector<double>& re_im) {
    return {re_im.at(0), re_im.at(1)};
}

int run(int argc, char** argv) {
    CLI::App app{"truncated Toeplitz operators on model spaces: checks and theorem verification"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    int trials = 20;
    int degree = 0;
    std::vector<double> z_flag{0.0, 0.0};
    std::vector<double> a_flag{0.5, 0.0};
    std::vector<double> w_flag{0.5, 0.0};
    std::string name;
    std::string kind;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a Blaschke product file at a point");
    eval_cmd->add_option("file", file, "Blaschke product JSON")->required();
    eval_cmd->add_option("--z", z_flag, "evaluation point, two reals")->expected(2);

    auto* csym_cmd = app.add_subcommand("check-csym", "top-level C-symmetry of an operator file");
    csym_cmd->add_option("file", file, "operator JSON")->required();
    csym_cmd->add_option("--tol", tol, "pass threshold");

    auto* tto_cmd = app.add_subcommand("check-tto", "membership in the truncated Toeplitz space");
    tto_cmd->add_option("file", file, "operator JSON")->required();
    tto_cmd->add_option("--tol", tol, "pass threshold");

    auto* compress_cmd = app.add_subcommand("compress", "compress an operator down the zero chain");
    compress_cmd->add_option("file", file, "operator JSON")->required();
    compress_cmd->add_option("--degree", degree, "target sub-degree (default one level down)");
    compress_cmd->add_option("--out", out_path, "also write the result here");

    auto* verify_cmd = app.add_subcommand("verify", "run a named theorem verification");
    verify_cmd->add_option("--name", name, "zn | toeplitz-h2 | single-zero | finite-blaschke | infinite-blaschke | example3")
        ->required();
    verify_cmd->add_option("--seed", seed, "RNG seed");
    verify_cmd->add_option("--trials", trials, "trial count");
    verify_cmd->add_option("--degree", degree, "degree / truncation order");
    verify_cmd->add_option("--tol", tol, "tolerance_pass");
    verify_cmd->add_option("--a", a_flag, "zero for single-zero, two reals")->expected(2);
    verify_cmd->add_option("--w", w_flag, "parameter for example3, two reals")->expected(2);
    verify_cmd->add_option("--out", out_path, "also write the report here");

    auto* gen_cmd = app.add_subcommand("generate", "emit a seeded instance");
    gen_cmd->add_option("--kind", kind, "tto | chain-csym | top-csym-only | toeplitz | perturbed")
        ->required();
    gen_cmd->add_option("--seed", seed, "RNG seed");
    gen_cmd->add_option("--degree", degree, "instance degree");
    gen_cmd->add_option("--out", out_path, "also write the instance here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (tol <= 0.0) throw ttolab::InvalidArgument("--tol must be positive");
    if (trials < 1) throw ttolab::InvalidArgument("--trials must be at least 1");

    if (app.got_subcommand(eval_cmd)) {
        const ttolab::FiniteBlaschke B = ttolab::blaschke_from_json(ttolab::load_json_file(file));
        const ttolab::Complex z = to_complex(z_flag);
        const ttolab::Complex v = ttolab::eval(B, z);
        Json j;
        j["name"] = "eval";
        j["z"] = ttolab::complex_to_json(z);
        j["value"] = ttolab::complex_to_json(v);
        j["modulus"] = std::abs(v);
        j["derivative"] = ttolab::complex_to_json(ttolab::derivative(B, z));
        j["verdict"] = "pass";
        return emit(j, out_path, 0);
    }

    if (app.got_subcommand(csym_cmd) || app.got_subcommand(tto_cmd)) {
        const bool csym = app.got_subcommand(csym_cmd);
        const ttolab::OperatorMatrix M =
            ttolab::operator_from_json(ttolab::load_json_file(file));
        const auto [ok, residual] =
            csym ? ttolab::is_c_symmetric(M, tol) : ttolab::is_tto(M, tol);
        Json j;
        j["name"] = csym ? "check-csym" : "check-tto";
        j["residual"] = residual;
        j["tolerance"] = tol;
        j["verdict"] = ok ? "pass" : "fail";
        return emit(j, out_path, ok ? 0 : 1);
    }

    if (app.got_subcommand(compress_cmd)) {
        const ttolab::OperatorMatrix M =
            ttolab::operator_from_json(ttolab::load_json_file(file));
        const int target = degree > 0 ? degree : M.dim() - 1;
        const ttolab::OperatorMatrix C = ttolab::compress_from_tail(M, target);
        return emit(ttolab::operator_to_json(C), out_path, 0);
    }

    if (app.got_subcommand(verify_cmd)) {
        ttolab::TrialConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        cfg.tolerance_pass = tol;
        ttolab::Report rep;
        if (name == "zn") {
            const int d = degree > 0 ? degree : 4;
            cfg.degree_min = cfg.degree_max = d;
            rep = ttolab::verify_zn(cfg);
        } else if (name == "toeplitz-h2") {
            const int d = degree > 0 ? degree : 10;
            cfg.degree_min = cfg.degree_max = d;
            rep = ttolab::verify_toeplitz_h2(cfg);
        } else if (name == "single-zero") {
            const int d = degree > 0 ? degree : 3;
            cfg.degree_min = cfg.degree_max = d;
            rep = ttolab::verify_single_zero(cfg, ttolab::UnitDiskPoint(to_complex(a_flag)));
        } else if (name == "finite-blaschke") {
            if (degree > 0) cfg.degree_min = cfg.degree_max = degree;
            rep = ttolab::verify_finite_blaschke(cfg);
        } else if (name == "infinite-blaschke") {
            const int d = degree > 0 ? degree : 12;
            cfg.degree_min = cfg.degree_max = d;
            rep = ttolab::verify_infinite_blaschke(cfg);
        } else if (name == "example3") {
            cfg.degree_min = cfg.degree_max = 3;
            rep = ttolab::verify_example_degree3(ttolab::UnitDiskPoint(to_complex(w_flag)), cfg);
        } else {
            throw ttolab::InvalidArgument("unknown verification name: " + name);
        }
        return emit(rep.to_json(), out_path, verdict_exit(rep.verdict()));
    }

    if (app.got_subcommand(gen_cmd)) {
        ttolab::TrialConfig cfg;
        cfg.seed = seed;
        cfg.degree_max = degree > 0 ? degree : 4;
        cfg.degree_min = std::min(cfg.degree_min, cfg.degree_max);
        const ttolab::OperatorMatrix M =
            ttolab::gen_instance(ttolab::gen_kind_from_string(kind), cfg);
        return emit(ttolab::operator_to_json(M), out_path, 0);
    }

    throw ttolab::InvalidArgument("no subcommand selected");
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ttolab::Error& e) {
        ttolab::Json j;
        j["error"] = ttolab::Json{{"kind", e.kind()}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n" << std::flush;
        return 2;
    } catch (const std::exception& e) {
        ttolab::Json j;
        j["error"] = ttolab::Json{{"kind", "internal"}, {"message", e.what()}};
        std::cout << j.dump(2) << "\n" << std::flush;
        return 2;
    }
}
