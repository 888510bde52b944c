#include <cstdio>
#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "fracmech/experiments.hpp"

using namespace fracmech;

namespace {

ExperimentConfig load(const std::string& config_path, bool clamp) {
    ExperimentConfig cfg = parse_config(config_path);
    if (clamp) cfg.clamp_boundary = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Anisotropic nonlocal fractional continuum kinematics"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool clamp = false;

    auto add_common = [&](CLI::App* cmd, bool need_config) {
        auto* opt = cmd->add_option("--config", config_path, "config file (key = value)");
        if (need_config) opt->required();
        cmd->add_option("--out", out_path, "output CSV path (overrides config)");
        cmd->add_flag("--clamp-boundary", clamp,
                      "truncate nonlocal intervals at the body box instead of failing");
    };

    auto* ex1 = app.add_subcommand("example1",
                                   "linear motion: numeric gradient vs closed form");
    add_common(ex1, true);

    auto* ex2 = app.add_subcommand("example2",
                                   "exponential motion: strain curves over the X grid");
    add_common(ex2, true);
    bool serial = false;
    ex2->add_flag("--serial", serial, "use the serial reference kernel");

    auto* sweep = app.add_subcommand("sweep", "generic strain sweep from a config");
    add_common(sweep, true);
    sweep->add_flag("--serial", serial, "use the serial reference kernel");

    auto* derive = app.add_subcommand("derive", "one-off Riesz-Caputo derivative");
    DeriveRequest req;
    derive->add_option("--expr", req.expr, "function: exp | sin | poly3 | linear");
    derive->add_option("--point", req.t, "evaluation point t")->required();
    derive->add_option("--left", req.a, "left terminal a")->required();
    derive->add_option("--right", req.b, "right terminal b")->required();
    derive->add_option("--alpha", req.alpha, "fractional order in (0, 1]")->required();
    derive->add_option("--m", req.m, "quadrature subintervals per side");

    CLI11_PARSE(app, argc, argv);

    try {
        if (derive->parsed()) {
            std::printf("%.17g\n", run_derive(req));
            return 0;
        }
        const ExperimentConfig base = load(config_path, clamp);
        ExperimentConfig cfg = base;
        if (!out_path.empty()) cfg.output_path = out_path;
        if (cfg.output_path.empty()) {
            std::cerr << "error: no output path (--out or 'output' in config)\n";
            return 1;
        }
        const ExecutionPolicy policy =
            serial ? ExecutionPolicy::Serial : ExecutionPolicy::Parallel;
        if (ex1->parsed()) {
            emit_example1_csv(run_example1(cfg), cfg.output_path);
        } else if (ex2->parsed()) {
            if (cfg.motion_id != MotionId::Exponential) {
                std::cerr << "error: example2 requires motion = exponential\n";
                return 1;
            }
            emit_csv(run_example2(cfg, policy), cfg.output_path);
        } else if (sweep->parsed()) {
            emit_csv(run_example2(cfg, policy), cfg.output_path);
        }
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}
