#pragma once

#include <string>
#include <vector>

#include "ialign/problem.hpp"
#include "ialign/types.hpp"

namespace ialign {

// Precoder/decoder matrices for every user: V_i is M_i x d_i and maps streams
// to transmit antennas, U_i is N_i x d_i and maps receive antennas to stream
// estimates.
template <typename Scalar>
struct MatrixBundle {
  std::vector<ComplexMatrixX<Scalar>> precoders;  // V_i
  std::vector<ComplexMatrixX<Scalar>> decoders;   // U_i
};

// Layout of the packed real vector of length 2 * sum_i (M_i + N_i) d_i:
//
//   [vec(V_1), ..., vec(V_K), vec(U_1^H), ..., vec(U_K^H)]
//
// where vec() stacks columns and each complex scalar occupies two consecutive
// reals, real part first. Because the decoder blocks store vec(U_i^H), the
// on-vector scalars are the conjugates of the U_i entries; unpack undoes the
// conjugation and returns U_i itself.

template <typename Scalar>
MatrixBundle<Scalar> make_zero_bundle(const ProblemSpec& spec) {
  MatrixBundle<Scalar> bundle;
  bundle.precoders.reserve(spec.num_users);
  bundle.decoders.reserve(spec.num_users);
  for (int i = 0; i < spec.num_users; ++i) {
    bundle.precoders.push_back(
        ComplexMatrixX<Scalar>::Zero(spec.tx_antennas[i], spec.streams[i]));
    bundle.decoders.push_back(
        ComplexMatrixX<Scalar>::Zero(spec.rx_antennas[i], spec.streams[i]));
  }
  return bundle;
}

template <typename Scalar>
void check_bundle_shape(const MatrixBundle<Scalar>& bundle, const ProblemSpec& spec) {
  const auto k = static_cast<std::size_t>(spec.num_users);
  if (bundle.precoders.size() != k || bundle.decoders.size() != k) {
    throw DimensionMismatchError("bundle must hold one precoder and one decoder per user");
  }
  for (int i = 0; i < spec.num_users; ++i) {
    if (bundle.precoders[i].rows() != spec.tx_antennas[i] ||
        bundle.precoders[i].cols() != spec.streams[i]) {
      throw DimensionMismatchError("precoder shape mismatch for user " + std::to_string(i));
    }
    if (bundle.decoders[i].rows() != spec.rx_antennas[i] ||
        bundle.decoders[i].cols() != spec.streams[i]) {
      throw DimensionMismatchError("decoder shape mismatch for user " + std::to_string(i));
    }
  }
}

// Writes the bundle into a preallocated vector of length spec.real_dimension.
template <typename Scalar>
void pack_into(const MatrixBundle<Scalar>& bundle, const ProblemSpec& spec,
               Eigen::Ref<VectorX<Scalar>> x) {
  check_bundle_shape(bundle, spec);
  if (x.size() != spec.real_dimension) {
    throw DimensionMismatchError("output vector length " + std::to_string(x.size()) +
                                 " != " + std::to_string(spec.real_dimension));
  }
  Eigen::Index k = 0;
  for (int i = 0; i < spec.num_users; ++i) {
    const ComplexMatrixX<Scalar>& v = bundle.precoders[i];
    for (Eigen::Index col = 0; col < v.cols(); ++col) {
      for (Eigen::Index row = 0; row < v.rows(); ++row) {
        x[k++] = v(row, col).real();
        x[k++] = v(row, col).imag();
      }
    }
  }
  for (int i = 0; i < spec.num_users; ++i) {
    const ComplexMatrixX<Scalar>& u = bundle.decoders[i];
    // Columns of U_i^H are indexed by the receive antenna a; entry (s, a) of
    // U_i^H equals conj(U_i(a, s)).
    for (Eigen::Index a = 0; a < u.rows(); ++a) {
      for (Eigen::Index s = 0; s < u.cols(); ++s) {
        x[k++] = u(a, s).real();
        x[k++] = -u(a, s).imag();
      }
    }
  }
}

// Reads a packed vector into a preallocated bundle of matching shapes.
template <typename Scalar>
void unpack_into(const Eigen::Ref<const VectorX<Scalar>>& x, const ProblemSpec& spec,
                 MatrixBundle<Scalar>& bundle) {
  if (x.size() != spec.real_dimension) {
    throw DimensionMismatchError("vector length " + std::to_string(x.size()) +
                                 " != " + std::to_string(spec.real_dimension));
  }
  check_bundle_shape(bundle, spec);
  Eigen::Index k = 0;
  for (int i = 0; i < spec.num_users; ++i) {
    ComplexMatrixX<Scalar>& v = bundle.precoders[i];
    for (Eigen::Index col = 0; col < v.cols(); ++col) {
      for (Eigen::Index row = 0; row < v.rows(); ++row) {
        v(row, col) = std::complex<Scalar>(x[k], x[k + 1]);
        k += 2;
      }
    }
  }
  for (int i = 0; i < spec.num_users; ++i) {
    ComplexMatrixX<Scalar>& u = bundle.decoders[i];
    for (Eigen::Index a = 0; a < u.rows(); ++a) {
      for (Eigen::Index s = 0; s < u.cols(); ++s) {
        u(a, s) = std::complex<Scalar>(x[k], -x[k + 1]);
        k += 2;
      }
    }
  }
}

template <typename Scalar>
VectorX<Scalar> pack(const MatrixBundle<Scalar>& bundle, const ProblemSpec& spec) {
  VectorX<Scalar> x(spec.real_dimension);
  pack_into<Scalar>(bundle, spec, x);
  return x;
}

template <typename Scalar>
MatrixBundle<Scalar> unpack(const Eigen::Ref<const VectorX<Scalar>>& x,
                            const ProblemSpec& spec) {
  MatrixBundle<Scalar> bundle = make_zero_bundle<Scalar>(spec);
  unpack_into<Scalar>(x, spec, bundle);
  return bundle;
}

}  // namespace ialign
