#include "fracmech/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace fracmech {

Tensor2 Tensor2::identity(Leg leg) {
    return diag(1.0, 1.0, 1.0, leg, leg);
}

Tensor2 Tensor2::diag(double d0, double d1, double d2, Leg row, Leg col) {
    Tensor2 t(row, col);
    t(0, 0) = d0;
    t(1, 1) = d1;
    t(2, 2) = d2;
    return t;
}

Tensor2 Tensor2::zero(Leg row, Leg col) { return Tensor2(row, col); }

Tensor2 Tensor2::transposed() const {
    Tensor2 t(col_, row_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
    return t;
}

double Tensor2::det() const {
    const auto& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Tensor2 Tensor2::inverse() const {
    const auto& a = *this;
    const double d = det();
    Tensor2 adj(col_, row_);
    adj(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
    adj(0, 1) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
    adj(0, 2) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
    adj(1, 0) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
    adj(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
    adj(1, 2) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
    adj(2, 0) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
    adj(2, 1) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
    adj(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    // crude condition estimate: ||A||_max * ||adj(A)||_max / |det|
    double amax = max_abs();
    double adjmax = adj.max_abs();
    if (d == 0.0 || amax * adjmax / std::abs(d) > 1e12) {
        throw std::runtime_error("Tensor2::inverse: singular or ill-conditioned matrix");
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) adj(i, j) /= d;
    return adj;
}

Tensor2 Tensor2::operator+(const Tensor2& o) const {
    Tensor2 t(row_, col_);
    for (int k = 0; k < 9; ++k) t.e_[k] = e_[k] + o.e_[k];
    return t;
}

Tensor2 Tensor2::operator-(const Tensor2& o) const {
    Tensor2 t(row_, col_);
    for (int k = 0; k < 9; ++k) t.e_[k] = e_[k] - o.e_[k];
    return t;
}

Tensor2 Tensor2::operator*(const Tensor2& o) const {
    if (col_ != o.row_) {
        throw std::invalid_argument("Tensor2: inner leg tags do not match");
    }
    Tensor2 t(row_, o.col_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
            t(i, j) = s;
        }
    return t;
}

Tensor2 Tensor2::operator*(double s) const {
    Tensor2 t(row_, col_);
    for (int k = 0; k < 9; ++k) t.e_[k] = e_[k] * s;
    return t;
}

Vec3 Tensor2::operator*(const Vec3& v) const {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
}

double Tensor2::max_abs() const {
    double m = 0.0;
    for (double v : e_) m = std::max(m, std::abs(v));
    return m;
}

double Tensor2::norm() const {
    double s = 0.0;
    for (double v : e_) s += v * v;
    return std::sqrt(s);
}

double Tensor2::asymmetry() const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const double d = 0.5 * ((*this)(i, j) - (*this)(j, i));
            s += d * d;
        }
    return std::sqrt(s);
}

Tensor2 Tensor2::symmetrized() const {
    Tensor2 t(row_, col_);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) t(i, j) = 0.5 * ((*this)(i, j) + (*this)(j, i));
    return t;
}

Tensor2 operator*(double s, const Tensor2& t) { return t * s; }

}  // namespace fracmech
