#include "fracmech/strains.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmech {

Tensor2 green_lagrange(const Tensor2& Fd) {
    Tensor2 E = 0.5 * (Fd.transposed() * Fd - Tensor2::identity(Fd.col_leg()));
    return E.symmetrized();
}

Tensor2 euler_almansi(const Tensor2& Fd) {
    const Tensor2 Fi = Fd.inverse();
    Tensor2 e = 0.5 * (Tensor2::identity(Fd.row_leg()) - Fi.transposed() * Fi);
    return e.symmetrized();
}

StrainPair strain_pair(StrainFamily family, const KinematicSetup& s, const Vec3& X) {
    StrainPair out;
    Tensor2 rawE(Leg::Material, Leg::Material);
    Tensor2 rawe(Leg::Spatial, Leg::Spatial);
    switch (family) {
        case StrainFamily::Classical: {
            const Tensor2 F = classical_F(s.motion, X, s.t);
            rawE = 0.5 * (F.transposed() * F - Tensor2::identity(Leg::Material));
            const Tensor2 Fi = F.inverse();
            rawe = 0.5 * (Tensor2::identity(Leg::Spatial) - Fi.transposed() * Fi);
            break;
        }
        case StrainFamily::FracMaterialBased: {
            const Tensor2 FX = frac_F_material(s, X);
            rawE = 0.5 * (FX.transposed() * FX - Tensor2::identity(Leg::Material));
            const Tensor2 Fi = FX.inverse();
            rawe = 0.5 * (Tensor2::identity(Leg::Spatial) - Fi.transposed() * Fi);
            break;
        }
        case StrainFamily::FracSpatialBased: {
            // E_x = 1/2 (F_x^{-T} F_x^{-1} - I), e_x = 1/2 (i - F_x^T F_x)
            const Tensor2 Fx = frac_F_spatial(s, s.motion.forward(X, s.t));
            const Tensor2 Fxi = Fx.inverse();
            rawE = 0.5 * (Fxi.transposed() * Fxi - Tensor2::identity(Leg::Material));
            rawe = 0.5 * (Tensor2::identity(Leg::Spatial) - Fx.transposed() * Fx);
            break;
        }
        case StrainFamily::AlphaBased: {
            const Tensor2 Fa = composite_F(GradientKind::AlphaComposite, s, X);
            rawE = 0.5 * (Fa.transposed() * Fa - Tensor2::identity(Leg::Material));
            const Tensor2 Fi = Fa.inverse();
            rawe = 0.5 * (Tensor2::identity(Leg::Spatial) - Fi.transposed() * Fi);
            break;
        }
    }
    out.asymmetry_E = rawE.asymmetry();
    out.asymmetry_e = rawe.asymmetry();
    out.E = rawE.symmetrized();
    out.e = rawe.symmetrized();
    return out;
}

CauchyGreen cauchy_green(const Tensor2& Fd) {
    return {(Fd.transposed() * Fd).symmetrized(), (Fd * Fd.transposed()).symmetrized()};
}

PolarFactors polar_decompose(const Tensor2& Fd) {
    if (!(Fd.det() > 0.0)) {
        throw std::domain_error("polar_decompose: determinant must be positive");
    }
    Tensor2 R = Fd;
    for (int it = 0; it < 100; ++it) {
        const Tensor2 next = 0.5 * (R + R.inverse().transposed());
        const double delta = (next - R).norm();
        R = next;
        if (delta < 1e-12) break;
    }
    PolarFactors out;
    out.R = R;
    out.U = (R.transposed() * Fd).symmetrized();
    out.V = (Fd * R.transposed()).symmetrized();
    return out;
}

Tensor2 small_strain_tensor(const Tensor2& grad_u) { return grad_u.symmetrized(); }

}  // namespace fracmech
