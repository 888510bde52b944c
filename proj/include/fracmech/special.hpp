#pragma once

#include <functional>

namespace fracmech {

/// Euler gamma function for x > 0, Lanczos approximation.
/// Relative error below 1e-12 on (0, 10]; throws std::domain_error for x <= 0.
double gamma_fn(double x);

enum class VarsigmaMode { GammaTwoMinusAlpha, Custom };

/// Scaling function of the Riesz-Caputo combination.
/// Default mode evaluates Gamma(2 - alpha).
double varsigma(double alpha, VarsigmaMode mode = VarsigmaMode::GammaTwoMinusAlpha,
                const std::function<double(double)>& custom = {});

}  // namespace fracmech
