#pragma once

#include <functional>
#include <optional>

#include "fracmech/special.hpp"

namespace fracmech {

/// Fractional order alpha in (0, 1]; alpha == 1 selects the exact classical branch.
class FracOrder {
  public:
    explicit FracOrder(double alpha);
    double value() const { return alpha_; }
    bool is_classical() const { return alpha_ == 1.0; }

  private:
    double alpha_;
};

/// Evaluation interval (a, b) with interior point t.
struct Interval {
    double a;
    double b;
    double t;
};

/// A scalar function of one variable together with its first derivative.
/// When the analytic derivative is absent a central finite difference with
/// step max(1e-6, 1e-8*|t|) is used; quadrature accuracy then floors near 1e-6.
struct Fn1D {
    std::function<double(double)> value;
    std::optional<std::function<double(double)>> derivative;

    double d(double t) const;
};

struct DerivativeSpec {
    FracOrder order;
    Interval interval;
    int m_left = 100;
    int m_right = 100;
    VarsigmaMode varsigma_mode = VarsigmaMode::GammaTwoMinusAlpha;
    std::function<double(double)> varsigma_custom = {};
};

/// Left-sided Caputo derivative of order alpha over (a, t), modified trapezoidal
/// rule with m subintervals. For alpha == 1 returns f'(t) exactly.
double left_caputo(const Fn1D& f, double a, double t, FracOrder alpha, int m);

/// Right-sided Caputo derivative of order alpha over (t, b), carrying the (-1)^n
/// factor (n = 1 throughout). For alpha == 1 returns f'(t) exactly.
double right_caputo(const Fn1D& f, double t, double b, FracOrder alpha, int m);

/// Riesz-Caputo derivative: varsigma(alpha)/2 * (left + (-1)^n * right) with n = 1.
/// For alpha == 1 returns f'(t) exactly; the sign bookkeeping of the two one-sided
/// operators is fixed so that this classical reduction also emerges from the
/// quadrature in the limit alpha -> 1.
double riesz_caputo(const Fn1D& f, const DerivativeSpec& spec);

}  // namespace fracmech
