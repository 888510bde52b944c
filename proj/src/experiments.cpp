#include "fracmech/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace fracmech {

ConfigError::ConfigError(std::vector<std::string> issues)
    : std::runtime_error([&issues] {
          std::string msg = "invalid config:";
          for (const auto& s : issues) msg += "\n  - " + s;
          return msg;
      }()),
      issues_(std::move(issues)) {}

namespace {

std::vector<double> parse_double_list(const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(std::stod(item));
    }
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string family_tag(StrainFamily f) {
    switch (f) {
        case StrainFamily::Classical: return "classical";
        case StrainFamily::FracMaterialBased: return "frac_material";
        case StrainFamily::FracSpatialBased: return "frac_spatial";
        case StrainFamily::AlphaBased: return "alpha";
    }
    return "?";
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& origin) {
    ExperimentConfig cfg;
    std::vector<std::string> issues;
    std::map<std::string, std::string> kv;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            issues.push_back(origin + ":" + std::to_string(lineno) +
                             ": expected key = value");
            continue;
        }
        kv[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }

    auto take = [&kv](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) return "";
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto num = [&issues](const std::string& key, const std::string& v, double fallback) {
        if (v.empty()) return fallback;
        try {
            return std::stod(v);
        } catch (const std::exception&) {
            issues.push_back("field '" + key + "': not a number: " + v);
            return fallback;
        }
    };

    if (const std::string v = take("motion"); !v.empty()) {
        if (v == "linear") cfg.motion_id = MotionId::Linear;
        else if (v == "exponential") cfg.motion_id = MotionId::Exponential;
        else if (v == "translation") cfg.motion_id = MotionId::Translation;
        else issues.push_back("field 'motion': unknown motion '" + v + "'");
    }
    cfg.beta = num("beta", take("beta"), cfg.beta);
    if (const std::string v = take("alpha_values"); !v.empty()) {
        try {
            cfg.alpha_values = parse_double_list(v);
        } catch (const std::exception&) {
            issues.push_back("field 'alpha_values': malformed list: " + v);
        }
    }
    if (const std::string v = take("ell_values"); !v.empty()) {
        try {
            cfg.ell_values = parse_double_list(v);
        } catch (const std::exception&) {
            issues.push_back("field 'ell_values': malformed list: " + v);
        }
    }
    if (const std::string v = take("anisotropy_ratios"); !v.empty()) {
        try {
            cfg.anisotropy_ratios = parse_double_list(v);
        } catch (const std::exception&) {
            issues.push_back("field 'anisotropy_ratios': malformed list: " + v);
        }
    }
    cfg.x_min = num("x_min", take("x_min"), cfg.x_min);
    cfg.x_max = num("x_max", take("x_max"), cfg.x_max);
    cfg.x_count = static_cast<int>(num("x_count", take("x_count"), cfg.x_count));
    cfg.m = static_cast<int>(num("m", take("m"), cfg.m));
    cfg.box_min = num("box_min", take("box_min"), cfg.box_min);
    cfg.box_max = num("box_max", take("box_max"), cfg.box_max);
    if (const std::string v = take("clamp_boundary"); !v.empty()) {
        cfg.clamp_boundary = (v == "true" || v == "1");
    }
    if (const std::string v = take("families"); !v.empty()) {
        std::stringstream fs(v);
        std::string item;
        while (std::getline(fs, item, ',')) {
            const std::string f = trim(item);
            if (f == "classical") cfg.strain_families.push_back(StrainFamily::Classical);
            else if (f == "frac_material")
                cfg.strain_families.push_back(StrainFamily::FracMaterialBased);
            else if (f == "frac_spatial")
                cfg.strain_families.push_back(StrainFamily::FracSpatialBased);
            else if (f == "alpha") cfg.strain_families.push_back(StrainFamily::AlphaBased);
            else issues.push_back("field 'families': unknown family '" + f + "'");
        }
    }
    cfg.output_path = take("output");

    for (const auto& [k, v] : kv) {
        issues.push_back("unknown key '" + k + "'");
    }

    // defaults
    if (cfg.alpha_values.empty()) cfg.alpha_values = {0.5};
    if (cfg.ell_values.empty()) cfg.ell_values = {0.5};
    if (cfg.anisotropy_ratios.empty()) cfg.anisotropy_ratios = {1.0};
    if (cfg.strain_families.empty())
        cfg.strain_families = {StrainFamily::FracMaterialBased};

    // validation
    for (double a : cfg.alpha_values) {
        if (!(a > 0.0) || a > 1.0)
            issues.push_back("field 'alpha_values': alpha = " + std::to_string(a) +
                             " outside (0, 1]");
    }
    for (double l : cfg.ell_values) {
        if (!(l > 0.0))
            issues.push_back("field 'ell_values': ell must be positive");
    }
    for (double r : cfg.anisotropy_ratios) {
        if (!(r > 0.0))
            issues.push_back("field 'anisotropy_ratios': ratio must be positive");
    }
    if (cfg.x_count < 2) issues.push_back("field 'x_count': grid count must be >= 2");
    if (cfg.m < 2) issues.push_back("field 'm': quadrature needs m >= 2");
    if (!(cfg.x_min < cfg.x_max)) issues.push_back("field 'x_min': requires x_min < x_max");
    if (!(cfg.box_min < cfg.box_max))
        issues.push_back("field 'box_min': requires box_min < box_max");

    if (!issues.empty()) throw ConfigError(std::move(issues));
    return cfg;
}

ExperimentConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

Motion make_motion(const ExperimentConfig& cfg) {
    switch (cfg.motion_id) {
        case MotionId::Linear: return motions::linear_uniaxial(cfg.beta);
        case MotionId::Exponential: return motions::exponential();
        case MotionId::Translation: return motions::rigid_translation({0.1, 0.0, 0.0});
    }
    throw std::logic_error("make_motion: unknown motion id");
}

KinematicSetup make_setup(const ExperimentConfig& cfg, double alpha, double ell,
                          double ratio) {
    KinematicSetup s;
    s.motion = make_motion(cfg);
    s.orders_material = OrderField::uniform(alpha);
    s.orders_spatial = OrderField::uniform(alpha);
    s.horizon_material = NonlocalHorizon::from_ratio(ell, ratio);
    s.horizon_spatial = NonlocalHorizon::from_ratio(ell, ratio);
    s.m = cfg.m;
    s.policy = cfg.clamp_boundary ? BoundaryPolicy::Clamp : BoundaryPolicy::Error;
    for (int i = 0; i < 3; ++i) {
        s.material_box.lo[i] = cfg.box_min;
        s.material_box.hi[i] = cfg.box_max;
        s.spatial_box.lo[i] = cfg.box_min;
        s.spatial_box.hi[i] = cfg.box_max;
    }
    if (cfg.motion_id == MotionId::Exponential) {
        // inverse motion takes a logarithm along x1
        s.spatial_box.lo[0] = std::max(s.spatial_box.lo[0], 1e-9);
    }
    return s;
}

std::vector<Example1Row> run_example1(const ExperimentConfig& cfg) {
    if (cfg.motion_id != MotionId::Linear) {
        throw ConfigError({"example1 requires motion = linear"});
    }
    std::vector<Example1Row> rows;
    const Vec3 X{1.0, 1.0, 1.0};
    for (double alpha : cfg.alpha_values) {
        for (double ell : cfg.ell_values) {
            for (double ratio : cfg.anisotropy_ratios) {
                const KinematicSetup s = make_setup(cfg, alpha, ell, ratio);
                const Tensor2 FX = frac_F_material(s, X);
                const NonlocalHorizon& h = s.horizon_material;
                const double M = affine_scale_coefficient(alpha, h.ell_L(0, 0),
                                                          h.ell_R(0, 0), h.ell(0, 0));
                Example1Row r;
                r.alpha = alpha;
                r.ell = ell;
                r.ell_L = h.ell_L(0, 0);
                r.ell_R = h.ell_R(0, 0);
                r.F11 = FX(0, 0);
                r.F22 = FX(1, 1);
                r.F33 = FX(2, 2);
                r.M_analytic = M;
                const double d1 = std::abs(FX(0, 0) - M * (1.0 + cfg.beta));
                const double d2 = std::abs(FX(1, 1) - M);
                const double d3 = std::abs(FX(2, 2) - M);
                r.discrepancy = std::max({d1, d2, d3});
                const Tensor2 E = green_lagrange(FX);
                r.E11 = E(0, 0);
                r.E22 = E(1, 1);
                r.E33 = E(2, 2);
                rows.push_back(r);
            }
        }
    }
    return rows;
}

std::vector<ResultRow> run_example2(const ExperimentConfig& cfg, ExecutionPolicy policy) {
    const std::size_t nx = cfg.x_count;
    const std::size_t na = cfg.alpha_values.size();
    const std::size_t nl = cfg.ell_values.size();
    const std::size_t nr = cfg.anisotropy_ratios.size();
    const std::size_t nf = cfg.strain_families.size();
    const std::size_t total = nx * na * nl * nr * nf;
    std::vector<ResultRow> rows(total);

    const double dx = (cfg.x_max - cfg.x_min) / (cfg.x_count - 1);

    auto compute = [&](std::size_t idx) {
        std::size_t rest = idx;
        const std::size_t fi = rest % nf; rest /= nf;
        const std::size_t ri = rest % nr; rest /= nr;
        const std::size_t li = rest % nl; rest /= nl;
        const std::size_t ai = rest % na; rest /= na;
        const std::size_t xi = rest;

        const double X1 = cfg.x_min + xi * dx;
        const double alpha = cfg.alpha_values[ai];
        const double ell = cfg.ell_values[li];
        const double ratio = cfg.anisotropy_ratios[ri];
        const StrainFamily fam = cfg.strain_families[fi];

        const KinematicSetup s = make_setup(cfg, alpha, ell, ratio);
        const StrainPair sp = strain_pair(fam, s, Vec3{X1, 0.0, 0.0});

        ResultRow& r = rows[idx];
        r.X = X1;
        r.alpha = alpha;
        r.ell = ell;
        r.ell_L = s.horizon_material.ell_L(0, 0);
        r.ell_R = s.horizon_material.ell_R(0, 0);
        r.family = family_tag(fam);
        r.E11 = sp.E(0, 0);
        r.E22 = sp.E(1, 1);
        r.E33 = sp.E(2, 2);
        r.e11 = sp.e(0, 0);
        r.e22 = sp.e(1, 1);
        r.e33 = sp.e(2, 2);
    };

    if (policy == ExecutionPolicy::Parallel) {
        // exceptions must not escape the parallel region; capture the first
        // one and rethrow once all threads have joined
        std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(total); ++i) {
            try {
                compute(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(fracmech_sweep_error)
                if (!first_error) first_error = std::current_exception();
            }
        }
        if (first_error) std::rethrow_exception(first_error);
    } else {
        for (std::size_t i = 0; i < total; ++i) compute(i);
    }
    return rows;
}

double run_derive(const DeriveRequest& req) {
    Fn1D f;
    if (req.expr == "exp") {
        f.value = [](double t) { return std::exp(t); };
        f.derivative = [](double t) { return std::exp(t); };
    } else if (req.expr == "sin") {
        f.value = [](double t) { return std::sin(t); };
        f.derivative = [](double t) { return std::cos(t); };
    } else if (req.expr == "poly3") {
        f.value = [](double t) { return t * t * t; };
        f.derivative = [](double t) { return 3.0 * t * t; };
    } else if (req.expr == "linear") {
        f.value = [](double t) { return t; };
        f.derivative = [](double) { return 1.0; };
    } else {
        throw ConfigError({"derive: unknown expression '" + req.expr + "'"});
    }
    DerivativeSpec spec{FracOrder(req.alpha), Interval{req.a, req.b, req.t}, req.m, req.m};
    return riesz_caputo(f, spec);
}

namespace {

void write_num(std::string& out, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

}  // namespace

std::string csv_string(const std::vector<ResultRow>& rows) {
    std::string out = "X,alpha,ell,ell_L,ell_R,family,E11,E22,E33,e11,e22,e33\n";
    for (const auto& r : rows) {
        write_num(out, r.X); out += ',';
        write_num(out, r.alpha); out += ',';
        write_num(out, r.ell); out += ',';
        write_num(out, r.ell_L); out += ',';
        write_num(out, r.ell_R); out += ',';
        out += r.family; out += ',';
        write_num(out, r.E11); out += ',';
        write_num(out, r.E22); out += ',';
        write_num(out, r.E33); out += ',';
        write_num(out, r.e11); out += ',';
        write_num(out, r.e22); out += ',';
        write_num(out, r.e33); out += '\n';
    }
    return out;
}

void emit_csv(const std::vector<ResultRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_csv: cannot open " + path);
    out << csv_string(rows);
    if (!out) throw std::runtime_error("emit_csv: write failed for " + path);
}

void emit_example1_csv(const std::vector<Example1Row>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("emit_example1_csv: cannot open " + path);
    std::string s =
        "alpha,ell,ell_L,ell_R,F11,F22,F33,M_analytic,discrepancy,E11,E22,E33\n";
    for (const auto& r : rows) {
        write_num(s, r.alpha); s += ',';
        write_num(s, r.ell); s += ',';
        write_num(s, r.ell_L); s += ',';
        write_num(s, r.ell_R); s += ',';
        write_num(s, r.F11); s += ',';
        write_num(s, r.F22); s += ',';
        write_num(s, r.F33); s += ',';
        write_num(s, r.M_analytic); s += ',';
        write_num(s, r.discrepancy); s += ',';
        write_num(s, r.E11); s += ',';
        write_num(s, r.E22); s += ',';
        write_num(s, r.E33); s += '\n';
    }
    out << s;
    if (!out) throw std::runtime_error("emit_example1_csv: write failed for " + path);
}

}  // namespace fracmech
