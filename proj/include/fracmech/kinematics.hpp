#pragma once

#include "fracmech/frac_derivative.hpp"
#include "fracmech/motion.hpp"
#include "fracmech/tensor.hpp"

namespace fracmech {

/// 3x3 matrix of fractional orders, entry (i, j) in (0, 1].
class OrderField {
  public:
    OrderField() { fill(1.0); }
    static OrderField uniform(double alpha);

    double operator()(int i, int j) const { return a_[3 * i + j]; }
    void set(int i, int j, double alpha);
    bool all_classical() const;

  private:
    void fill(double alpha);
    std::array<double, 9> a_{};
};

/// Per-entry (ell_L, ell_R, ell) length-scale triple. All entries positive;
/// ell defaults to (ell_L + ell_R)/2 entrywise but is independently settable.
class NonlocalHorizon {
  public:
    NonlocalHorizon() : NonlocalHorizon(1.0, 1.0) {}
    NonlocalHorizon(double ell_L, double ell_R);

    static NonlocalHorizon symmetric(double ell) { return {ell, ell}; }
    /// Fixed scaling length ell with anisotropy ratio r = ell_L / ell_R,
    /// so ell_L = 2 ell r/(1+r) and ell_R = 2 ell/(1+r).
    static NonlocalHorizon from_ratio(double ell, double ratio);

    double ell_L(int i, int j) const { return lL_[3 * i + j]; }
    double ell_R(int i, int j) const { return lR_[3 * i + j]; }
    double ell(int i, int j) const { return l_[3 * i + j]; }
    void set_entry(int i, int j, double ell_L, double ell_R);
    void set_ell(int i, int j, double ell);

  private:
    std::array<double, 9> lL_{}, lR_{}, l_{};
};

enum class GradientKind {
    Classical,
    FracMaterial,
    FracSpatial,
    AlphaComposite,
    AlphaMaterialSide,
    AlphaSpatialSide,
};

/// Everything a fractional-gradient evaluation needs: the motion, the two
/// order fields (material alpha_aA and spatial alpha_Aa kept independent),
/// the two horizons, quadrature resolution, body boxes and boundary policy.
struct KinematicSetup {
    Motion motion;
    OrderField orders_material;
    OrderField orders_spatial;
    NonlocalHorizon horizon_material;
    NonlocalHorizon horizon_spatial;
    int m = 100;
    BodyBox material_box;
    BodyBox spatial_box;
    BoundaryPolicy policy = BoundaryPolicy::Error;
    VarsigmaMode varsigma_mode = VarsigmaMode::GammaTwoMinusAlpha;
    double t = 0.0;
};

/// Classical deformation gradient, analytic when the motion carries a
/// jacobian, central finite difference otherwise.
Tensor2 classical_F(const Motion& motion, const Vec3& X, double t);
Tensor2 classical_F_inverse(const Motion& motion, const Vec3& x, double t);

/// Fractional deformation gradient in material description: entry (a, A) is
/// ell^{alpha-1} times the Riesz-Caputo derivative of phi_a along X_A over
/// (X_A - ell_L, X_A + ell_R), the other coordinates frozen. Entries with
/// alpha == 1 take the exact classical branch.
Tensor2 frac_F_material(const KinematicSetup& s, const Vec3& X);

/// Spatial counterpart built from the inverse motion along x_a.
Tensor2 frac_F_spatial(const KinematicSetup& s, const Vec3& x);

/// Any node of the line-element diagram, evaluated at material point X
/// (spatial ingredients use x = phi(X)).
Tensor2 composite_F(GradientKind kind, const KinematicSetup& s, const Vec3& X);

/// Grad U_X = F_X - I (material description).
Tensor2 material_displacement_gradient(const KinematicSetup& s, const Vec3& X);
/// grad u_x = i - F_x (spatial description).
Tensor2 spatial_displacement_gradient(const KinematicSetup& s, const Vec3& x);

/// 1D small fractional Cauchy strain of a displacement u at x.
double small_strain_1d(const Fn1D& u, double x, FracOrder alpha, double ell_L,
                       double ell_R, double ell, int m,
                       VarsigmaMode mode = VarsigmaMode::GammaTwoMinusAlpha);

struct LeggedVec {
    Vec3 v{};
    Leg leg = Leg::Material;
};

/// Line-element transport dv' = G dv; throws when the gradient's column leg
/// does not match the vector's configuration.
LeggedVec transport_line_element(const LeggedVec& v, const Tensor2& gradient);

/// Closed-form rescaling coefficient of affine motions:
/// varsigma(alpha) / (2 Gamma(2-alpha)) * ell^{alpha-1} (ell_L^{1-alpha} + ell_R^{1-alpha}).
double affine_scale_coefficient(double alpha, double ell_L, double ell_R, double ell,
                                VarsigmaMode mode = VarsigmaMode::GammaTwoMinusAlpha);

}  // namespace fracmech
