#pragma once

#include <functional>

#include "fracmech/tensor.hpp"

namespace fracmech {

enum class PKFamily { Classical, FracMaterial, FracSpatial, Alpha };

struct StressState {
    Tensor2 sigma{Leg::Spatial, Leg::Spatial};
    double rho0 = 1.0;
    double rho = 1.0;
    Vec3 f{};
};

/// det(Fd).
double jacobian(const Tensor2& Fd);

/// Mass conservation rho0 = J rho, solved for the spatial density.
double mass_transform(double rho0, const Tensor2& Fd);

/// n~ = F^alpha_X n. The transform is returned raw; it is not re-normalized.
Vec3 normal_transform(const Vec3& n, const Tensor2& F_alpha_X);

/// t~ = F^alpha_X t.
Vec3 traction_transform(const Vec3& t_n, const Tensor2& F_alpha_X);

/// sigma~ = sigma: the fractional Cauchy stress is the classical one.
Tensor2 fractional_cauchy(const Tensor2& sigma);

struct PKPair {
    Tensor2 P{Leg::Spatial, Leg::Material};
    Tensor2 S{Leg::Material, Leg::Material};
};

/// First and second Piola-Kirchhoff pair of the chosen family.
/// Classical / FracMaterial / Alpha: P = J sigma Fd^{-T}, S = Fd^{-1} P.
/// FracSpatial (Fd is the spatial fractional gradient, inverse role):
/// P = J^{-1} sigma Fd^T, S = J^{-1} Fd sigma Fd^T = Fd P.
PKPair piola_kirchhoff(PKFamily family, const Tensor2& sigma, const Tensor2& Fd);

/// Inverts the defining display of the chosen family, recovering the Cauchy
/// stress from S and Fd.
Tensor2 cauchy_from_second_pk(PKFamily family, const Tensor2& S, const Tensor2& Fd);

/// Static local balance residual div(sigma^T) + rho f, central differences
/// of step h on the stress field.
Vec3 static_balance_residual(const std::function<Tensor2(const Vec3&)>& sigma_field,
                             double rho, const Vec3& f, const Vec3& x, double h);

}  // namespace fracmech
