#include "fracmech/stress.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmech {

namespace {

Tensor2 retag(const Tensor2& t, Leg row, Leg col) {
    Tensor2 r(row, col);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = t(i, j);
    return r;
}

}  // namespace

double jacobian(const Tensor2& Fd) { return Fd.det(); }

double mass_transform(double rho0, const Tensor2& Fd) {
    const double J = Fd.det();
    if (!(J > 0.0)) {
        throw std::domain_error("mass_transform: Jacobian must be positive");
    }
    if (!(rho0 > 0.0)) {
        throw std::domain_error("mass_transform: reference density must be positive");
    }
    return rho0 / J;
}

Vec3 normal_transform(const Vec3& n, const Tensor2& F_alpha_X) {
    if (F_alpha_X.row_leg() != Leg::Spatial || F_alpha_X.col_leg() != Leg::Spatial) {
        throw std::invalid_argument("normal_transform: expected a spatial-legged map");
    }
    return F_alpha_X * n;
}

Vec3 traction_transform(const Vec3& t_n, const Tensor2& F_alpha_X) {
    if (F_alpha_X.row_leg() != Leg::Spatial || F_alpha_X.col_leg() != Leg::Spatial) {
        throw std::invalid_argument("traction_transform: expected a spatial-legged map");
    }
    return F_alpha_X * t_n;
}

Tensor2 fractional_cauchy(const Tensor2& sigma) {
    if (sigma.asymmetry() > 1e-12 * std::max(1.0, sigma.norm())) {
        throw std::invalid_argument("fractional_cauchy: Cauchy stress must be symmetric");
    }
    return sigma;
}

PKPair piola_kirchhoff(PKFamily family, const Tensor2& sigma, const Tensor2& Fd) {
    PKPair out;
    const double J = Fd.det();
    // The spatial-family display mixes configurations, so the products are
    // formed numerically and the result legs assigned by convention.
    const Tensor2 s = retag(sigma, Leg::Spatial, Leg::Spatial);
    const Tensor2 F = retag(Fd, Leg::Spatial, Leg::Spatial);
    const Tensor2 FiT = F.inverse().transposed();
    Tensor2 P_raw(Leg::Spatial, Leg::Spatial), S_raw(Leg::Spatial, Leg::Spatial);
    if (family == PKFamily::FracSpatial) {
        // P = J^{-1} sigma Fd^T,  S = J^{-1} Fd sigma Fd^T = Fd P
        // (Fd here is the spatial fractional gradient, whose inverse plays the
        // role of the deformation gradient; the plain transpose is what makes
        // S = Fd P and the classical-limit coincidence hold.)
        P_raw = (1.0 / J) * (s * F.transposed());
        S_raw = F * P_raw;
    } else {
        // P = J sigma Fd^{-T},  S = Fd^{-1} P
        P_raw = J * (s * FiT);
        S_raw = F.inverse() * P_raw;
    }
    out.P = retag(P_raw, Leg::Spatial, Leg::Material);
    out.S = retag(S_raw, Leg::Material, Leg::Material);
    return out;
}

Tensor2 cauchy_from_second_pk(PKFamily family, const Tensor2& S, const Tensor2& Fd) {
    const double J = Fd.det();
    const Tensor2 Su = retag(S, Leg::Spatial, Leg::Spatial);
    const Tensor2 F = retag(Fd, Leg::Spatial, Leg::Spatial);
    if (family == PKFamily::FracSpatial) {
        // S = J^{-1} Fd sigma Fd^T  =>  sigma = J Fd^{-1} S Fd^{-T}
        const Tensor2 Fi = F.inverse();
        return retag(J * (Fi * Su * Fi.transposed()), Leg::Spatial, Leg::Spatial);
    }
    // S = J Fd^{-1} sigma Fd^{-T}  =>  sigma = Fd S Fd^T / J
    return retag((1.0 / J) * (F * Su * F.transposed()), Leg::Spatial, Leg::Spatial);
}

Vec3 static_balance_residual(const std::function<Tensor2(const Vec3&)>& sigma_field,
                             double rho, const Vec3& f, const Vec3& x, double h) {
    Vec3 r{};
    // div(sigma^T)_i = d sigma_ji / d x_j
    for (int j = 0; j < 3; ++j) {
        Vec3 lo = x, hi = x;
        lo[j] -= h;
        hi[j] += h;
        const Tensor2 sl = sigma_field(lo);
        const Tensor2 sh = sigma_field(hi);
        for (int i = 0; i < 3; ++i) {
            r[i] += (sh(j, i) - sl(j, i)) / (2.0 * h);
        }
    }
    for (int i = 0; i < 3; ++i) r[i] += rho * f[i];
    return r;
}

}  // namespace fracmech
