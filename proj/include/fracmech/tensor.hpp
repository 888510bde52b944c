#pragma once

#include <array>
#include <cstddef>

namespace fracmech {

using Vec3 = std::array<double, 3>;

enum class Leg { Material, Spatial };

/// Real 3x3 second-order tensor with basis-tagged legs. Products are only
/// defined when the inner tags match, which keeps the two-point bookkeeping
/// of the deformation-gradient family honest.
class Tensor2 {
  public:
    Tensor2() = default;
    Tensor2(Leg row, Leg col) : row_(row), col_(col) {}
    Tensor2(const std::array<double, 9>& e, Leg row, Leg col)
        : e_(e), row_(row), col_(col) {}

    static Tensor2 identity(Leg leg);
    static Tensor2 diag(double d0, double d1, double d2, Leg row, Leg col);
    static Tensor2 zero(Leg row, Leg col);

    double& operator()(int i, int j) { return e_[3 * i + j]; }
    double operator()(int i, int j) const { return e_[3 * i + j]; }

    Leg row_leg() const { return row_; }
    Leg col_leg() const { return col_; }

    Tensor2 transposed() const;
    double det() const;
    /// Adjugate-based inverse; throws std::runtime_error when the estimated
    /// condition number exceeds 1e12.
    Tensor2 inverse() const;

    Tensor2 operator+(const Tensor2& o) const;
    Tensor2 operator-(const Tensor2& o) const;
    Tensor2 operator*(const Tensor2& o) const;  // throws on inner-tag mismatch
    Tensor2 operator*(double s) const;
    Vec3 operator*(const Vec3& v) const;

    /// Largest absolute entry.
    double max_abs() const;
    /// Frobenius norm.
    double norm() const;
    /// Frobenius norm of the antisymmetric part, (A - A^T)/2.
    double asymmetry() const;
    /// (A + A^T)/2 with unchanged tags.
    Tensor2 symmetrized() const;

  private:
    std::array<double, 9> e_{};
    Leg row_ = Leg::Material;
    Leg col_ = Leg::Material;
};

Tensor2 operator*(double s, const Tensor2& t);

}  // namespace fracmech
