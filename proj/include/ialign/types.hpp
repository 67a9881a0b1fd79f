#pragma once

#include <Eigen/Core>

#include <complex>

namespace ialign {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using ComplexMatrixX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using ComplexVectorX = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

}  // namespace ialign
