#include "fracmech/special.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmech {

namespace {

// Lanczos coefficients, g = 7, 9 terms (Godfrey's set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_gamma(double x) {
    if (x < 0.5) {
        // reflection keeps the argument of the series above 1/2
        return M_PI / (std::sin(M_PI * x) * lanczos_gamma(1.0 - x));
    }
    x -= 1.0;
    double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) {
        acc += kLanczos[i] / (x + i);
    }
    const double t = x + kLanczosG + 0.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * acc;
}

}  // namespace

double gamma_fn(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("gamma_fn: argument must be positive");
    }
    return lanczos_gamma(x);
}

double varsigma(double alpha, VarsigmaMode mode,
                const std::function<double(double)>& custom) {
    if (mode == VarsigmaMode::Custom) {
        if (!custom) throw std::invalid_argument("varsigma: custom mode without function");
        return custom(alpha);
    }
    return gamma_fn(2.0 - alpha);
}

}  // namespace fracmech
