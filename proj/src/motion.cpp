#include "fracmech/motion.hpp"

#include <cmath>

namespace fracmech::motions {

Motion identity() {
    Motion m;
    m.forward = [](const Vec3& X, double) { return X; };
    m.inverse = [](const Vec3& x, double) { return x; };
    m.forward_jacobian = [](const Vec3&, double) {
        return Tensor2::diag(1, 1, 1, Leg::Spatial, Leg::Material);
    };
    m.inverse_jacobian = [](const Vec3&, double) {
        return Tensor2::diag(1, 1, 1, Leg::Material, Leg::Spatial);
    };
    return m;
}

Motion linear_uniaxial(double beta) {
    Motion m;
    m.forward = [beta](const Vec3& X, double) {
        return Vec3{(1.0 + beta) * X[0], X[1], X[2]};
    };
    m.inverse = [beta](const Vec3& x, double) {
        return Vec3{x[0] / (1.0 + beta), x[1], x[2]};
    };
    m.forward_jacobian = [beta](const Vec3&, double) {
        return Tensor2::diag(1.0 + beta, 1, 1, Leg::Spatial, Leg::Material);
    };
    m.inverse_jacobian = [beta](const Vec3&, double) {
        return Tensor2::diag(1.0 / (1.0 + beta), 1, 1, Leg::Material, Leg::Spatial);
    };
    return m;
}

Motion exponential() {
    Motion m;
    m.forward = [](const Vec3& X, double) {
        return Vec3{std::exp(X[0]), X[1], X[2]};
    };
    m.inverse = [](const Vec3& x, double) {
        return Vec3{std::log(x[0]), x[1], x[2]};
    };
    m.forward_jacobian = [](const Vec3& X, double) {
        return Tensor2::diag(std::exp(X[0]), 1, 1, Leg::Spatial, Leg::Material);
    };
    m.inverse_jacobian = [](const Vec3& x, double) {
        return Tensor2::diag(1.0 / x[0], 1, 1, Leg::Material, Leg::Spatial);
    };
    return m;
}

Motion rigid_translation(const Vec3& c) {
    Motion m;
    m.forward = [c](const Vec3& X, double) {
        return Vec3{X[0] + c[0], X[1] + c[1], X[2] + c[2]};
    };
    m.inverse = [c](const Vec3& x, double) {
        return Vec3{x[0] - c[0], x[1] - c[1], x[2] - c[2]};
    };
    m.forward_jacobian = [](const Vec3&, double) {
        return Tensor2::diag(1, 1, 1, Leg::Spatial, Leg::Material);
    };
    m.inverse_jacobian = [](const Vec3&, double) {
        return Tensor2::diag(1, 1, 1, Leg::Material, Leg::Spatial);
    };
    return m;
}

}  // namespace fracmech::motions
