#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fracmech/kinematics.hpp"
#include "fracmech/stress.hpp"

using namespace fracmech;

namespace {

void check_close(const Tensor2& a, const Tensor2& b, double tol) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(a(i, j) == doctest::Approx(b(i, j)).epsilon(tol).scale(1.0));
}

Tensor2 random_sym_stress(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Tensor2 s(Leg::Spatial, Leg::Spatial);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) s(i, j) = s(j, i) = u(rng);
    return s;
}

Tensor2 random_gradient(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-0.4, 0.4);
    Tensor2 F(Leg::Spatial, Leg::Material);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) F(i, j) = u(rng);
        F(i, i) += 1.5;
    }
    return F;
}

}  // namespace

TEST_CASE("jacobian") {
    CHECK(jacobian(Tensor2::identity(Leg::Material)) == 1.0);
    CHECK(jacobian(Tensor2::diag(1.2, 1, 1, Leg::Spatial, Leg::Material)) ==
          doctest::Approx(1.2).epsilon(1e-14));
    Tensor2 R(Leg::Spatial, Leg::Material);
    R(0, 0) = R(1, 1) = std::cos(0.4);
    R(0, 1) = -std::sin(0.4);
    R(1, 0) = std::sin(0.4);
    R(2, 2) = 1.0;
    CHECK(jacobian(R) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mass_transform") {
    CHECK(mass_transform(2.5, Tensor2::identity(Leg::Material)) == doctest::Approx(2.5));
    CHECK(mass_transform(1.0, Tensor2::diag(1.2, 1, 1, Leg::Spatial, Leg::Material)) ==
          doctest::Approx(1.0 / 1.2));
    CHECK_THROWS_AS(
        mass_transform(1.0, Tensor2::diag(-1, 1, 1, Leg::Spatial, Leg::Material)),
        std::domain_error);
    CHECK_THROWS_AS(mass_transform(-1.0, Tensor2::identity(Leg::Material)),
                    std::domain_error);
    // alpha = 1: fractional and classical family values coincide
    KinematicSetup s;
    s.motion = motions::linear_uniaxial(0.2);
    s.orders_material = OrderField::uniform(1.0);
    const double rho_cls = mass_transform(1.0, classical_F(s.motion, {1, 1, 1}, 0.0));
    const double rho_frac = mass_transform(1.0, frac_F_material(s, {1, 1, 1}));
    CHECK(rho_cls == doctest::Approx(rho_frac).epsilon(1e-12));
}

TEST_CASE("normal and traction transforms") {
    const Tensor2 i = Tensor2::identity(Leg::Spatial);
    const Vec3 n{0, 0, 1};
    CHECK(normal_transform(n, i)[2] == 1.0);
    CHECK(traction_transform({1, 2, 3}, i)[1] == 2.0);

    const double M = 0.9;
    const Tensor2 D = Tensor2::diag(M, M, M, Leg::Spatial, Leg::Spatial);
    CHECK(normal_transform({1, 0, 0}, D)[0] == doctest::Approx(M));

    // homogeneity in the traction argument
    const Vec3 t1 = traction_transform({1, -2, 0.5}, D);
    const Vec3 t2 = traction_transform({2, -4, 1.0}, D);
    for (int k = 0; k < 3; ++k) CHECK(t2[k] == doctest::Approx(2.0 * t1[k]));

    CHECK_THROWS_AS(normal_transform(n, Tensor2::identity(Leg::Material)),
                    std::invalid_argument);
}

TEST_CASE("fractional Cauchy stress is the classical one") {
    std::mt19937 rng(3);
    const Tensor2 sigma = random_sym_stress(rng);
    check_close(fractional_cauchy(sigma), sigma, 1e-15);
    CHECK(fractional_cauchy(Tensor2::zero(Leg::Spatial, Leg::Spatial)).max_abs() == 0.0);

    Tensor2 asym = sigma;
    asym(0, 1) += 0.5;
    CHECK_THROWS_AS(fractional_cauchy(asym), std::invalid_argument);

    // consistency of the two transforms for commuting diagonal maps:
    // F (sigma^T n) = sigma~^T (F n) when F is a multiple of the identity
    const Tensor2 F = Tensor2::diag(0.7, 0.7, 0.7, Leg::Spatial, Leg::Spatial);
    const Vec3 n{0.3, -0.4, 0.8};
    const Vec3 t_n = sigma.transposed() * n;
    const Vec3 lhs = traction_transform(t_n, F);
    const Vec3 rhs = fractional_cauchy(sigma).transposed() * normal_transform(n, F);
    for (int k = 0; k < 3; ++k) CHECK(lhs[k] == doctest::Approx(rhs[k]).epsilon(1e-12));
}

TEST_CASE("Piola-Kirchhoff pairs") {
    std::mt19937 rng(11);
    SUBCASE("zero stress and identity gradient") {
        const Tensor2 zero = Tensor2::zero(Leg::Spatial, Leg::Spatial);
        const Tensor2 I = Tensor2::identity(Leg::Material);
        for (PKFamily fam : {PKFamily::Classical, PKFamily::FracMaterial,
                             PKFamily::FracSpatial, PKFamily::Alpha}) {
            const PKPair pz = piola_kirchhoff(fam, zero, I);
            CHECK(pz.P.max_abs() == 0.0);
            CHECK(pz.S.max_abs() == 0.0);
            const Tensor2 sigma = random_sym_stress(rng);
            const PKPair pi = piola_kirchhoff(fam, sigma, I);
            check_close(pi.P, sigma, 1e-14);
            check_close(pi.S, sigma, 1e-14);
        }
    }
    SUBCASE("pull-back recovers the Cauchy stress for every family") {
        for (int rep = 0; rep < 100; ++rep) {
            const Tensor2 sigma = random_sym_stress(rng);
            const Tensor2 Fd = random_gradient(rng);
            for (PKFamily fam : {PKFamily::Classical, PKFamily::FracMaterial,
                                 PKFamily::FracSpatial, PKFamily::Alpha}) {
                const PKPair pk = piola_kirchhoff(fam, sigma, Fd);
                check_close(cauchy_from_second_pk(fam, pk.S, Fd), sigma, 1e-10);
            }
        }
    }
    SUBCASE("alpha = 1: the four families coincide") {
        KinematicSetup s;
        s.motion = motions::exponential();
        s.orders_material = OrderField::uniform(1.0);
        s.orders_spatial = OrderField::uniform(1.0);
        const Vec3 X{0.6, 0, 0};
        const Tensor2 sigma = random_sym_stress(rng);
        const Tensor2 F = classical_F(s.motion, X, 0.0);
        const Tensor2 FX = frac_F_material(s, X);
        const Tensor2 Fx = frac_F_spatial(s, s.motion.forward(X, 0.0));
        const Tensor2 Fa = composite_F(GradientKind::AlphaComposite, s, X);
        const PKPair p0 = piola_kirchhoff(PKFamily::Classical, sigma, F);
        const PKPair p1 = piola_kirchhoff(PKFamily::FracMaterial, sigma, FX);
        const PKPair p2 = piola_kirchhoff(PKFamily::FracSpatial, sigma, Fx);
        const PKPair p3 = piola_kirchhoff(PKFamily::Alpha, sigma, Fa);
        check_close(p1.P, p0.P, 1e-8);
        check_close(p2.P, p0.P, 1e-8);
        check_close(p3.P, p0.P, 1e-8);
        check_close(p1.S, p0.S, 1e-8);
        check_close(p2.S, p0.S, 1e-8);
        check_close(p3.S, p0.S, 1e-8);
    }
}

TEST_CASE("static balance residual") {
    SUBCASE("constant stress, no body force") {
        auto field = [](const Vec3&) {
            Tensor2 s(Leg::Spatial, Leg::Spatial);
            s(0, 0) = 2.0;
            s(1, 1) = -1.0;
            return s;
        };
        const Vec3 r = static_balance_residual(field, 1.0, {0, 0, 0}, {0.5, 0.5, 0.5},
                                               1e-4);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(r[k]) < 1e-10);
    }
    SUBCASE("linear stress with compensating body force balances") {
        // sigma_11 = 3 x1, sigma_22 = -2 x2: div(sigma^T) = (3, -2, 0)
        auto field = [](const Vec3& x) {
            Tensor2 s(Leg::Spatial, Leg::Spatial);
            s(0, 0) = 3.0 * x[0];
            s(1, 1) = -2.0 * x[1];
            return s;
        };
        const double rho = 2.0;
        const Vec3 f{-3.0 / rho, 2.0 / rho, 0.0};
        const Vec3 r = static_balance_residual(field, rho, f, {0.2, 0.4, 0.1}, 1e-4);
        for (int k = 0; k < 3; ++k) CHECK(std::abs(r[k]) < 1e-8);
    }
    SUBCASE("analytic divergence of sigma_11 = x1") {
        auto field = [](const Vec3& x) {
            Tensor2 s(Leg::Spatial, Leg::Spatial);
            s(0, 0) = x[0];
            return s;
        };
        const Vec3 r = static_balance_residual(field, 1.0, {0, 0, 0}, {1, 1, 1}, 1e-4);
        CHECK(r[0] == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(std::abs(r[1]) < 1e-12);
        CHECK(std::abs(r[2]) < 1e-12);
    }
    SUBCASE("central differences converge at order 2 on a smooth field") {
        auto field = [](const Vec3& x) {
            Tensor2 s(Leg::Spatial, Leg::Spatial);
            s(0, 0) = std::sin(x[0] + 2.0 * x[1]);
            s(1, 0) = std::cos(x[1]);
            s(2, 2) = std::exp(0.5 * x[2]);
            return s;
        };
        // exact div(sigma^T) at x
        const Vec3 x{0.3, 0.7, -0.2};
        const Vec3 exact{std::cos(x[0] + 2.0 * x[1]) - std::sin(x[1]), 0.0,
                         0.5 * std::exp(0.5 * x[2])};
        auto err = [&](double h) {
            const Vec3 r = static_balance_residual(field, 1.0, {0, 0, 0}, x, h);
            double e = 0.0;
            for (int k = 0; k < 3; ++k) e = std::max(e, std::abs(r[k] - exact[k]));
            return e;
        };
        const double e1 = err(1e-2), e2 = err(5e-3);
        CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
    }
}

TEST_CASE("mass positivity follows from positive J and rho0") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 50; ++rep) {
        const Tensor2 Fd = random_gradient(rng);
        REQUIRE(Fd.det() > 0.0);
        CHECK(mass_transform(0.5, Fd) > 0.0);
    }
}
