#pragma once

#include "fracmech/kinematics.hpp"
#include "fracmech/tensor.hpp"

namespace fracmech {

/// The four strain formulations: classical F, fractional material F_X,
/// fractional spatial F_x (inverse-based material strain), and the composite
/// F^alpha.
enum class StrainFamily {
    Classical,
    FracMaterialBased,
    FracSpatialBased,
    AlphaBased,
};

/// Green-Lagrange / Euler-Almansi pair. Both tensors are symmetrized after
/// assembly; the pre-symmetrization asymmetry norms are kept as diagnostics
/// of quadrature noise.
struct StrainPair {
    Tensor2 E{Leg::Material, Leg::Material};
    Tensor2 e{Leg::Spatial, Leg::Spatial};
    double asymmetry_E = 0.0;
    double asymmetry_e = 0.0;
};

/// 1/2 (Fd^T Fd - I), material legs.
Tensor2 green_lagrange(const Tensor2& Fd);

/// 1/2 (i - Fd^{-T} Fd^{-1}), spatial legs.
Tensor2 euler_almansi(const Tensor2& Fd);

/// Evaluate the chosen family at material point X.
StrainPair strain_pair(StrainFamily family, const KinematicSetup& s, const Vec3& X);

/// Right and left Cauchy-Green tensors C = Fd^T Fd, b = Fd Fd^T.
struct CauchyGreen {
    Tensor2 C{Leg::Material, Leg::Material};
    Tensor2 b{Leg::Spatial, Leg::Spatial};
};
CauchyGreen cauchy_green(const Tensor2& Fd);

/// Polar decomposition Fd = R U = V R via Newton averaging of R and R^{-T};
/// requires det(Fd) > 0.
struct PolarFactors {
    Tensor2 R{Leg::Spatial, Leg::Material};
    Tensor2 U{Leg::Material, Leg::Material};
    Tensor2 V{Leg::Spatial, Leg::Spatial};
};
PolarFactors polar_decompose(const Tensor2& Fd);

/// 1/2 (grad_u + grad_u^T).
Tensor2 small_strain_tensor(const Tensor2& grad_u);

}  // namespace fracmech
