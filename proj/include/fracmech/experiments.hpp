#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fracmech/strains.hpp"

namespace fracmech {

enum class ExecutionPolicy { Serial, Parallel };

enum class MotionId { Linear, Exponential, Translation };

/// Config for the experiment runners. Anisotropy is parameterized by the
/// ratio r = ell_L / ell_R at fixed ell = (ell_L + ell_R)/2.
struct ExperimentConfig {
    MotionId motion_id = MotionId::Exponential;
    double beta = 0.2;
    std::vector<double> alpha_values;
    std::vector<double> ell_values;
    std::vector<double> anisotropy_ratios;
    double x_min = 0.5;
    double x_max = 1.5;
    int x_count = 21;
    int m = 100;
    std::vector<StrainFamily> strain_families;
    std::string output_path;
    bool clamp_boundary = false;
    double box_min = -1e6;
    double box_max = 1e6;
};

struct ResultRow {
    double X, alpha, ell, ell_L, ell_R;
    std::string family;
    double E11, E22, E33, e11, e22, e33;
};

struct Example1Row {
    double alpha, ell, ell_L, ell_R;
    double F11, F22, F33;
    double M_analytic;
    double discrepancy;  // max |numeric entry - analytic M-scaled entry|
    double E11, E22, E33;
};

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

/// Parse a flat key=value config file; throws ConfigError listing every
/// violation found.
ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);

/// Linear-motion sweep: numeric fractional gradient against the closed-form
/// affine coefficient, one row per (alpha, ell, ratio).
std::vector<Example1Row> run_example1(const ExperimentConfig& cfg);

/// Nonlinear-motion strain sweep over the X grid; row order is X-major, then
/// alpha, then ell, then ratio, then family, independent of execution policy.
std::vector<ResultRow> run_example2(const ExperimentConfig& cfg,
                                    ExecutionPolicy policy = ExecutionPolicy::Parallel);

/// One-off Riesz-Caputo evaluation used by the `derive` subcommand.
struct DeriveRequest {
    std::string expr = "exp";  // exp | sin | poly3 | linear
    double t = 0.5, a = 0.0, b = 1.0, alpha = 0.5;
    int m = 100;
};
double run_derive(const DeriveRequest& req);

std::string family_tag(StrainFamily f);

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path);
void emit_example1_csv(const std::vector<Example1Row>& rows, const std::string& path);
std::string csv_string(const std::vector<ResultRow>& rows);

/// Build the kinematic setup used for one (alpha, ell, ratio) cell of a sweep.
KinematicSetup make_setup(const ExperimentConfig& cfg, double alpha, double ell,
                          double ratio);

Motion make_motion(const ExperimentConfig& cfg);

}  // namespace fracmech
