#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "beamspace/errors.hpp"

namespace beamspace {

// Max-entry deviation from G = G^H relative to max(1, max|G|).
template <class Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& g,
                  typename Derived::RealScalar tol) {
    if (g.rows() != g.cols()) return false;
    const auto scale = std::max<typename Derived::RealScalar>(
        1, g.derived().cwiseAbs().maxCoeff());
    return (g.derived() - g.derived().adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

// Solve G X = RHS for Hermitian positive-definite G by Cholesky factorization.
template <class DerivedG, class DerivedR>
Eigen::Matrix<typename DerivedG::Scalar, Eigen::Dynamic, Eigen::Dynamic>
solve_hpd(const Eigen::MatrixBase<DerivedG>& g, const Eigen::MatrixBase<DerivedR>& rhs) {
    using Real = typename DerivedG::RealScalar;
    if (g.rows() != g.cols())
        throw DimensionError("system matrix must be square, got " + std::to_string(g.rows()) +
                             "x" + std::to_string(g.cols()));
    if (rhs.rows() != g.rows())
        throw DimensionError("right-hand side has " + std::to_string(rhs.rows()) +
                             " rows, expected " + std::to_string(g.rows()));
    if (!is_hermitian(g, Real(1e-10)))
        throw ParameterError("system matrix is not Hermitian");
    Eigen::LLT<Eigen::Matrix<typename DerivedG::Scalar, Eigen::Dynamic, Eigen::Dynamic>> llt(g.derived());
    if (llt.info() != Eigen::Success)
        throw NotPositiveDefiniteError("Cholesky factorization failed: matrix is not positive definite");
    return llt.solve(rhs.derived());
}

// Inverse of G + v v^H given inv(G), via the Sherman-Morrison identity
//   (G + v v^H)^{-1} = G^{-1} - (G^{-1} v)(G^{-1} v)^H / (1 + v^H G^{-1} v).
// The correction is formed from the single product u = G^{-1} v, which keeps
// the result exactly Hermitian when G^{-1} is.
template <class DerivedG, class DerivedV>
Eigen::Matrix<typename DerivedG::Scalar, Eigen::Dynamic, Eigen::Dynamic>
sherman_morrison_update(const Eigen::MatrixBase<DerivedG>& g_inv,
                        const Eigen::MatrixBase<DerivedV>& v) {
    using Scalar = typename DerivedG::Scalar;
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    if (g_inv.rows() != g_inv.cols() || v.rows() != g_inv.rows() || v.cols() != 1)
        throw DimensionError("rank-one update dimensions do not match");
    const Vector u = g_inv.derived() * v.derived();
    const Scalar denom = Scalar(1) + v.derived().dot(u);  // v^H u; real for Hermitian g_inv
    if (std::abs(denom) < 1e-14)
        throw DegenerateUpdateError("rank-one update denominator vanished");
    Matrix out = g_inv.derived();
    out.noalias() -= (u * u.adjoint()) / std::real(denom);
    return out;
}

}  // namespace beamspace
