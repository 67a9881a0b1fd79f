#pragma once

#include <Eigen/Eigenvalues>

#include "ialign/channel.hpp"
#include "ialign/packing.hpp"
#include "ialign/problem.hpp"
#include "ialign/types.hpp"

namespace ialign {

namespace detail {

template <typename Scalar>
ComplexMatrixX<Scalar> invert_2x2(const ComplexMatrixX<Scalar>& m) {
  const std::complex<Scalar> det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Scalar scale = m.squaredNorm();
  if (std::abs(det) <= Scalar(1e-12) * std::max(Scalar(1), scale)) {
    throw SingularChannelError("channel matrix is numerically singular");
  }
  ComplexMatrixX<Scalar> inv(2, 2);
  inv << m(1, 1) / det, -m(0, 1) / det, -m(1, 0) / det, m(0, 0) / det;
  return inv;
}

// Unit vector orthogonal to a 2-vector w: u with u^H w = 0.
template <typename Scalar>
ComplexMatrixX<Scalar> orthogonal_unit_2(const ComplexVectorX<Scalar>& w) {
  ComplexMatrixX<Scalar> u(2, 1);
  u(0, 0) = std::conj(w[1]);
  u(1, 0) = -std::conj(w[0]);
  const Scalar norm = u.norm();
  if (!(norm > Scalar(0))) {
    throw SingularChannelError("interference direction is zero");
  }
  u /= norm;
  return u;
}

}  // namespace detail

// Exact interference alignment for the (2x2, 1)^3 scenario. The first
// precoder is an eigenvector of the round-trip map
//   E = H_31^{-1} H_32 H_12^{-1} H_13 H_23^{-1} H_21,
// the remaining precoders chain through V_2 = H_32^{-1} H_31 V_1 and
// V_3 = H_23^{-1} H_21 V_1, and each decoder is the unit vector orthogonal to
// the (aligned) interference direction at its receiver. All columns are
// normalized. Serves as an exact reference point: the returned vector has
// leakage at the floating-point floor and full-rank direct links for generic
// channels.
template <typename Scalar>
VectorX<Scalar> closed_form_3user(const ChannelSet<Scalar>& channels,
                                  const ProblemSpec& spec) {
  if (spec.num_users != 3 ||
      spec.tx_antennas != std::vector<int>{2, 2, 2} ||
      spec.rx_antennas != std::vector<int>{2, 2, 2} ||
      spec.streams != std::vector<int>{1, 1, 1}) {
    throw InvalidDimensionsError("closed-form construction requires the (2x2,1)^3 scenario");
  }
  if (channels.num_users != spec.num_users) {
    throw DimensionMismatchError("channel grid does not match the scenario");
  }

  using CMat = ComplexMatrixX<Scalar>;
  // 1-based channel names H_ij map to channels(i-1, j-1).
  const CMat inv_h31 = detail::invert_2x2(channels(2, 0));
  const CMat inv_h12 = detail::invert_2x2(channels(0, 1));
  const CMat inv_h23 = detail::invert_2x2(channels(1, 2));
  const CMat roundtrip =
      inv_h31 * channels(2, 1) * inv_h12 * channels(0, 2) * inv_h23 * channels(1, 0);

  Eigen::ComplexEigenSolver<CMat> eigensolver(roundtrip);
  if (eigensolver.info() != Eigen::Success) {
    throw SingularChannelError("eigendecomposition of the round-trip map failed");
  }

  MatrixBundle<Scalar> bundle = make_zero_bundle<Scalar>(spec);
  bundle.precoders[0] = eigensolver.eigenvectors().col(0);
  bundle.precoders[0] /= bundle.precoders[0].norm();
  bundle.precoders[1] = detail::invert_2x2(channels(2, 1)) * channels(2, 0) * bundle.precoders[0];
  bundle.precoders[1] /= bundle.precoders[1].norm();
  bundle.precoders[2] = detail::invert_2x2(channels(1, 2)) * channels(1, 0) * bundle.precoders[0];
  bundle.precoders[2] /= bundle.precoders[2].norm();

  // Interference at receiver 1 arrives along H_12 V_2 (aligned with H_13 V_3);
  // at receivers 2 and 3 along H_21 V_1 and H_31 V_1.
  bundle.decoders[0] = detail::orthogonal_unit_2<Scalar>(channels(0, 1) * bundle.precoders[1]);
  bundle.decoders[1] = detail::orthogonal_unit_2<Scalar>(channels(1, 0) * bundle.precoders[0]);
  bundle.decoders[2] = detail::orthogonal_unit_2<Scalar>(channels(2, 0) * bundle.precoders[0]);

  return pack(bundle, spec);
}

}  // namespace ialign
