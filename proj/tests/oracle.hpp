#pragma once

// Test-only brute-force oracle for the one-sided Caputo integrals and their
// Riesz combination. Substituting s = (t - tau)^{1-alpha} removes the kernel
// singularity, after which a plain midpoint rule converges fast:
//   integral_a^t f'(tau) (t-tau)^{-alpha} dtau
//     = q * integral_0^{(t-a)^{1-alpha}} f'(t - s^q) ds,   q = 1/(1-alpha).
// Deliberately independent of the library implementation (std::tgamma, no
// shared quadrature code).

#include <cmath>
#include <functional>

namespace oracle {

inline double midpoint(const std::function<double(double)>& g, double lo, double hi,
                       int n) {
    const double h = (hi - lo) / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += g(lo + (i + 0.5) * h);
    return acc * h;
}

inline double left_caputo(const std::function<double(double)>& fprime, double a,
                          double t, double alpha, int n = 20000) {
    const double q = 1.0 / (1.0 - alpha);
    const double S = std::pow(t - a, 1.0 - alpha);
    const double integral =
        q * midpoint([&](double s) { return fprime(t - std::pow(s, q)); }, 0.0, S, n);
    return integral / std::tgamma(1.0 - alpha);
}

inline double right_caputo(const std::function<double(double)>& fprime, double t,
                           double b, double alpha, int n = 20000) {
    const double q = 1.0 / (1.0 - alpha);
    const double S = std::pow(b - t, 1.0 - alpha);
    const double integral =
        q * midpoint([&](double s) { return fprime(t + std::pow(s, q)); }, 0.0, S, n);
    return -integral / std::tgamma(1.0 - alpha);  // (-1)^n, n = 1
}

inline double riesz_caputo(const std::function<double(double)>& fprime, double a,
                           double t, double b, double alpha, int n = 20000) {
    const double varsigma = std::tgamma(2.0 - alpha);
    return 0.5 * varsigma *
           (left_caputo(fprime, a, t, alpha, n) - right_caputo(fprime, t, b, alpha, n));
}

// Closed-form affine rescaling coefficient, written out independently.
inline double affine_coefficient(double alpha, double ell_L, double ell_R, double ell) {
    return 0.5 * std::pow(ell, alpha - 1.0) *
           (std::pow(ell_L, 1.0 - alpha) + std::pow(ell_R, 1.0 - alpha));
}

}  // namespace oracle
