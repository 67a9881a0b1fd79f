#pragma once

#include <cstdint>
#include <vector>

#include "ialign/problem.hpp"
#include "ialign/rng.hpp"
#include "ialign/types.hpp"

namespace ialign {

// K x K grid of channel matrices. Entry (rx, tx) has rx_antennas[rx] rows and
// tx_antennas[tx] columns, matching its use in U_rx^H H V_tx. Immutable after
// generation.
template <typename Scalar>
struct ChannelSet {
  int num_users = 0;
  std::uint64_t seed = 0;
  std::vector<ComplexMatrixX<Scalar>> links;  // grid stored rx-major

  const ComplexMatrixX<Scalar>& operator()(int rx, int tx) const {
    return links[static_cast<std::size_t>(rx) * num_users + tx];
  }
  ComplexMatrixX<Scalar>& operator()(int rx, int tx) {
    return links[static_cast<std::size_t>(rx) * num_users + tx];
  }
};

// Draws every channel entry iid complex Gaussian with zero mean and unit
// variance. Pure function of (spec, seed): matrices are filled rx-major with
// tx inner, each matrix column-major, from the channel substream of `seed`.
template <typename Scalar>
ChannelSet<Scalar> generate_channels(const ProblemSpec& spec, std::uint64_t seed) {
  Rng rng = Rng::stream(seed, kChannelStream);
  ChannelSet<Scalar> channels;
  channels.num_users = spec.num_users;
  channels.seed = seed;
  channels.links.resize(static_cast<std::size_t>(spec.num_users) * spec.num_users);
  for (int rx = 0; rx < spec.num_users; ++rx) {
    for (int tx = 0; tx < spec.num_users; ++tx) {
      ComplexMatrixX<Scalar>& link = channels(rx, tx);
      link.resize(spec.rx_antennas[rx], spec.tx_antennas[tx]);
      for (Eigen::Index col = 0; col < link.cols(); ++col) {
        for (Eigen::Index row = 0; row < link.rows(); ++row) {
          const std::complex<double> z = rng.complex_gaussian();
          link(row, col) = std::complex<Scalar>(static_cast<Scalar>(z.real()),
                                                static_cast<Scalar>(z.imag()));
        }
      }
    }
  }
  return channels;
}

}  // namespace ialign
