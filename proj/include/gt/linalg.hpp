#pragma once

#include <Eigen/Dense>

namespace gt {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// Global geometric tolerance for membership and equality tests.
inline constexpr double kEpsGeom = 1e-10;

inline Mat3 minkowski_j() { return Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal(); }

// <u,v>_{1,2} = -u0 v0 + u1 v1 + u2 v2
inline double mink(const Vec3& u, const Vec3& v) { return -u(0) * v(0) + u(1) * v(1) + u(2) * v(2); }

// Lorentzian cross product, characterized by <u ⊠ v, w> = det(u, v, w).
inline Vec3 mink_cross(const Vec3& u, const Vec3& v) { return minkowski_j() * u.cross(v); }

inline Mat4 block_diag(const Mat3& a)
{
    Mat4 m = Mat4::Identity();
    m.topLeftCorner<3, 3>() = a;
    return m;
}

inline double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace gt
