#include "fracmech/kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmech {

OrderField OrderField::uniform(double alpha) {
    OrderField f;
    f.fill(alpha);
    return f;
}

void OrderField::fill(double alpha) {
    FracOrder check(alpha);
    a_.fill(alpha);
}

void OrderField::set(int i, int j, double alpha) {
    FracOrder check(alpha);
    a_[3 * i + j] = alpha;
}

bool OrderField::all_classical() const {
    for (double a : a_)
        if (a != 1.0) return false;
    return true;
}

NonlocalHorizon::NonlocalHorizon(double ell_L, double ell_R) {
    if (!(ell_L > 0.0) || !(ell_R > 0.0)) {
        throw std::domain_error("NonlocalHorizon: lengths must be positive");
    }
    lL_.fill(ell_L);
    lR_.fill(ell_R);
    l_.fill(0.5 * (ell_L + ell_R));
}

NonlocalHorizon NonlocalHorizon::from_ratio(double ell, double ratio) {
    if (!(ell > 0.0) || !(ratio > 0.0)) {
        throw std::domain_error("NonlocalHorizon: ell and ratio must be positive");
    }
    const double ell_R = 2.0 * ell / (1.0 + ratio);
    return {ratio * ell_R, ell_R};
}

void NonlocalHorizon::set_entry(int i, int j, double ell_L, double ell_R) {
    if (!(ell_L > 0.0) || !(ell_R > 0.0)) {
        throw std::domain_error("NonlocalHorizon: lengths must be positive");
    }
    lL_[3 * i + j] = ell_L;
    lR_[3 * i + j] = ell_R;
    l_[3 * i + j] = 0.5 * (ell_L + ell_R);
}

void NonlocalHorizon::set_ell(int i, int j, double ell) {
    if (!(ell > 0.0)) throw std::domain_error("NonlocalHorizon: ell must be positive");
    l_[3 * i + j] = ell;
}

namespace {

double fd_partial(const std::function<Vec3(const Vec3&, double)>& map, const Vec3& p,
                  double t, int comp, int axis) {
    const double h = std::max(1e-6, 1e-8 * std::abs(p[axis]));
    Vec3 lo = p, hi = p;
    lo[axis] -= h;
    hi[axis] += h;
    return (map(hi, t)[comp] - map(lo, t)[comp]) / (2.0 * h);
}

// Nonlocal interval for one gradient entry, boundary policy applied.
Interval entry_interval(double c, double ell_L, double ell_R, const BodyBox& box,
                        int axis, BoundaryPolicy policy) {
    double a = c - ell_L;
    double b = c + ell_R;
    if (!box.contains(a, axis) || !box.contains(b, axis)) {
        if (policy == BoundaryPolicy::Error) {
            throw std::domain_error(
                "fractional gradient: nonlocal interval leaves the body box");
        }
        a = std::max(a, box.lo[axis]);
        b = std::min(b, box.hi[axis]);
    }
    if (!(a < c) || !(c < b)) {
        throw std::domain_error(
            "fractional gradient: evaluation point not interior to its interval");
    }
    return {a, b, c};
}

// Shared kernel for the material and spatial fractional gradients; `forward`
// selects which map, which orders and which horizon are used.
Tensor2 frac_gradient(const KinematicSetup& s, const Vec3& p, bool material) {
    const auto& map = material ? s.motion.forward : s.motion.inverse;
    const auto& jac = material ? s.motion.forward_jacobian : s.motion.inverse_jacobian;
    const auto& orders = material ? s.orders_material : s.orders_spatial;
    const auto& horizon = material ? s.horizon_material : s.horizon_spatial;
    const auto& box = material ? s.material_box : s.spatial_box;
    if (!map) throw std::invalid_argument("frac_gradient: motion map not set");

    Tensor2 F(material ? Leg::Spatial : Leg::Material,
              material ? Leg::Material : Leg::Spatial);
    const double t = s.t;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double alpha = orders(i, j);
            if (alpha == 1.0) {
                F(i, j) = jac ? (*jac)(p, t)(i, j) : fd_partial(map, p, t, i, j);
                continue;
            }
            const Interval iv = entry_interval(p[j], horizon.ell_L(i, j),
                                               horizon.ell_R(i, j), box, j, s.policy);
            Fn1D g;
            g.value = [&map, &p, t, i, j](double v) {
                Vec3 q = p;
                q[j] = v;
                return map(q, t)[i];
            };
            if (jac) {
                g.derivative = [&jac, &p, t, i, j](double v) {
                    Vec3 q = p;
                    q[j] = v;
                    return (*jac)(q, t)(i, j);
                };
            }
            DerivativeSpec spec{FracOrder(alpha), iv, s.m, s.m, s.varsigma_mode};
            F(i, j) = std::pow(horizon.ell(i, j), alpha - 1.0) * riesz_caputo(g, spec);
        }
    }
    return F;
}

}  // namespace

Tensor2 classical_F(const Motion& motion, const Vec3& X, double t) {
    if (motion.forward_jacobian) return (*motion.forward_jacobian)(X, t);
    Tensor2 F(Leg::Spatial, Leg::Material);
    for (int a = 0; a < 3; ++a)
        for (int A = 0; A < 3; ++A) F(a, A) = fd_partial(motion.forward, X, t, a, A);
    return F;
}

Tensor2 classical_F_inverse(const Motion& motion, const Vec3& x, double t) {
    if (motion.inverse_jacobian) return (*motion.inverse_jacobian)(x, t);
    Tensor2 Fi(Leg::Material, Leg::Spatial);
    for (int A = 0; A < 3; ++A)
        for (int a = 0; a < 3; ++a) Fi(A, a) = fd_partial(motion.inverse, x, t, A, a);
    return Fi;
}

Tensor2 frac_F_material(const KinematicSetup& s, const Vec3& X) {
    return frac_gradient(s, X, true);
}

Tensor2 frac_F_spatial(const KinematicSetup& s, const Vec3& x) {
    return frac_gradient(s, x, false);
}

Tensor2 composite_F(GradientKind kind, const KinematicSetup& s, const Vec3& X) {
    switch (kind) {
        case GradientKind::Classical:
            return classical_F(s.motion, X, s.t);
        case GradientKind::FracMaterial:
            return frac_F_material(s, X);
        case GradientKind::FracSpatial:
            return frac_F_spatial(s, s.motion.forward(X, s.t));
        case GradientKind::AlphaComposite: {
            const Vec3 x = s.motion.forward(X, s.t);
            return frac_F_material(s, X) * classical_F_inverse(s.motion, x, s.t) *
                   frac_F_spatial(s, x).inverse();
        }
        case GradientKind::AlphaMaterialSide: {
            const Vec3 x = s.motion.forward(X, s.t);
            return frac_F_spatial(s, x) * classical_F(s.motion, X, s.t);
        }
        case GradientKind::AlphaSpatialSide: {
            const Vec3 x = s.motion.forward(X, s.t);
            return frac_F_material(s, X) * classical_F_inverse(s.motion, x, s.t);
        }
    }
    throw std::logic_error("composite_F: unknown gradient kind");
}

Tensor2 material_displacement_gradient(const KinematicSetup& s, const Vec3& X) {
    return frac_F_material(s, X) - Tensor2::identity(Leg::Material);
}

Tensor2 spatial_displacement_gradient(const KinematicSetup& s, const Vec3& x) {
    return Tensor2::identity(Leg::Spatial) - frac_F_spatial(s, x);
}

double small_strain_1d(const Fn1D& u, double x, FracOrder alpha, double ell_L,
                       double ell_R, double ell, int m, VarsigmaMode mode) {
    if (alpha.is_classical()) return u.d(x);
    if (!(ell_L > 0.0) || !(ell_R > 0.0) || !(ell > 0.0)) {
        throw std::domain_error("small_strain_1d: lengths must be positive");
    }
    const double left = left_caputo(u, x - ell_L, x, alpha, m);
    const double right = right_caputo(u, x, x + ell_R, alpha, m);
    return 0.5 * varsigma(alpha.value(), mode) * std::pow(ell, alpha.value() - 1.0) *
           (left - right);
}

LeggedVec transport_line_element(const LeggedVec& v, const Tensor2& gradient) {
    if (gradient.col_leg() != v.leg) {
        throw std::invalid_argument(
            "transport_line_element: gradient legs do not match vector configuration");
    }
    return {gradient * v.v, gradient.row_leg()};
}

double affine_scale_coefficient(double alpha, double ell_L, double ell_R, double ell,
                                VarsigmaMode mode) {
    if (alpha == 1.0) return 1.0;
    return varsigma(alpha, mode) / (2.0 * gamma_fn(2.0 - alpha)) *
           std::pow(ell, alpha - 1.0) *
           (std::pow(ell_L, 1.0 - alpha) + std::pow(ell_R, 1.0 - alpha));
}

}  // namespace fracmech
