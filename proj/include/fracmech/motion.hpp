#pragma once

#include <functional>
#include <optional>

#include "fracmech/tensor.hpp"

namespace fracmech {

/// Axis-aligned box declaring the body's reference (or spatial) domain.
struct BodyBox {
    Vec3 lo{-1e6, -1e6, -1e6};
    Vec3 hi{1e6, 1e6, 1e6};

    bool contains(double v, int axis) const { return v >= lo[axis] && v <= hi[axis]; }
};

/// Policy for nonlocal intervals that leave the declared body box.
enum class BoundaryPolicy { Error, Clamp };

/// Regular motion x = phi(X, t) with inverse X = phi^{-1}(x, t) and optional
/// analytic first partial derivatives. Stationary motions ignore t.
struct Motion {
    std::function<Vec3(const Vec3&, double)> forward;
    std::function<Vec3(const Vec3&, double)> inverse;
    /// d phi_a / d X_A, rows spatial, cols material.
    std::optional<std::function<Tensor2(const Vec3&, double)>> forward_jacobian;
    /// d phi^{-1}_A / d x_a, rows material, cols spatial.
    std::optional<std::function<Tensor2(const Vec3&, double)>> inverse_jacobian;
};

namespace motions {

Motion identity();
/// x = (1 + beta) X1 e1 + X2 e2 + X3 e3
Motion linear_uniaxial(double beta);
/// x = e^{X1} e1 + X2 e2 + X3 e3
Motion exponential();
/// x = X + c
Motion rigid_translation(const Vec3& c);

}  // namespace motions

}  // namespace fracmech
