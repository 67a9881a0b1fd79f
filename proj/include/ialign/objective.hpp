#pragma once

#include <Eigen/SVD>

#include <string>
#include <vector>

#include "ialign/channel.hpp"
#include "ialign/packing.hpp"
#include "ialign/problem.hpp"
#include "ialign/types.hpp"

namespace ialign {

// Interference leakage of a packed precoder/decoder vector, with a reusable
// workspace so repeated evaluations allocate nothing. One instance per thread;
// evaluation is a pure function of the input vector.
template <typename Scalar>
class LeakageEvaluator {
 public:
  LeakageEvaluator(ChannelSet<Scalar> channels, ProblemSpec spec)
      : channels_(std::move(channels)),
        spec_(std::move(spec)),
        bundle_(make_zero_bundle<Scalar>(spec_)) {
    if (channels_.num_users != spec_.num_users) {
      throw DimensionMismatchError("channel grid does not match the scenario");
    }
    int max_rx = 0;
    int max_d = 0;
    for (int i = 0; i < spec_.num_users; ++i) {
      max_rx = std::max(max_rx, spec_.rx_antennas[i]);
      max_d = std::max(max_d, spec_.streams[i]);
    }
    faded_.resize(max_rx, max_d);
    block_.resize(max_d, max_d);
  }

  const ProblemSpec& problem() const { return spec_; }
  const ChannelSet<Scalar>& channels() const { return channels_; }

  // Total squared interference power sum_{rx != tx} |U_rx^H H_{rx,tx} V_tx|_F^2.
  Scalar operator()(const Eigen::Ref<const VectorX<Scalar>>& x) {
    unpack_into<Scalar>(x, spec_, bundle_);
    Scalar total = 0;
    for (int rx = 0; rx < spec_.num_users; ++rx) {
      const auto& decoder = bundle_.decoders[rx];
      for (int tx = 0; tx < spec_.num_users; ++tx) {
        if (tx == rx) continue;
        auto faded = faded_.topLeftCorner(spec_.rx_antennas[rx], spec_.streams[tx]);
        auto block = block_.topLeftCorner(spec_.streams[rx], spec_.streams[tx]);
        faded.noalias() = channels_(rx, tx) * bundle_.precoders[tx];
        block.noalias() = decoder.adjoint() * faded;
        total += block.squaredNorm();
      }
    }
    return total;
  }

  // Residual blocks vec(U_rx^H H_{rx,tx} V_tx) for all ordered pairs rx != tx,
  // rx-major with tx ascending, each block column-stacked.
  void residuals_into(const Eigen::Ref<const VectorX<Scalar>>& x,
                      ComplexVectorX<Scalar>& out) {
    unpack_into<Scalar>(x, spec_, bundle_);
    out.resize(spec_.complex_equations);
    Eigen::Index k = 0;
    for (int rx = 0; rx < spec_.num_users; ++rx) {
      for (int tx = 0; tx < spec_.num_users; ++tx) {
        if (tx == rx) continue;
        auto faded = faded_.topLeftCorner(spec_.rx_antennas[rx], spec_.streams[tx]);
        auto block = block_.topLeftCorner(spec_.streams[rx], spec_.streams[tx]);
        faded.noalias() = channels_(rx, tx) * bundle_.precoders[tx];
        block.noalias() = bundle_.decoders[rx].adjoint() * faded;
        for (Eigen::Index col = 0; col < block.cols(); ++col) {
          for (Eigen::Index row = 0; row < block.rows(); ++row) {
            out[k++] = block(row, col);
          }
        }
      }
    }
  }

 private:
  ChannelSet<Scalar> channels_;
  ProblemSpec spec_;
  MatrixBundle<Scalar> bundle_;
  ComplexMatrixX<Scalar> faded_;
  ComplexMatrixX<Scalar> block_;
};

template <typename Scalar>
ComplexVectorX<Scalar> residuals(const Eigen::Ref<const VectorX<Scalar>>& x,
                                 const ChannelSet<Scalar>& channels,
                                 const ProblemSpec& spec) {
  LeakageEvaluator<Scalar> evaluator(channels, spec);
  ComplexVectorX<Scalar> out;
  evaluator.residuals_into(x, out);
  return out;
}

template <typename Scalar>
Scalar leakage(const Eigen::Ref<const VectorX<Scalar>>& x, const ChannelSet<Scalar>& channels,
               const ProblemSpec& spec) {
  LeakageEvaluator<Scalar> evaluator(channels, spec);
  return evaluator(x);
}

// Outcome of the per-user rank condition rank(U_i^H H_ii V_i) = d_i.
struct RankReport {
  std::vector<int> achieved_rank;
  std::vector<char> user_pass;
  double tolerance = 0;
  bool pass = false;
};

// Ranks are counted from singular values exceeding tol * sigma_max.
template <typename Scalar>
RankReport rank_check(const Eigen::Ref<const VectorX<Scalar>>& x,
                      const ChannelSet<Scalar>& channels, const ProblemSpec& spec,
                      Scalar tol = Scalar(1e-8)) {
  if (!(tol > Scalar(0))) {
    throw InvalidDimensionsError("rank tolerance must be positive");
  }
  if (channels.num_users != spec.num_users) {
    throw DimensionMismatchError("channel grid does not match the scenario");
  }
  MatrixBundle<Scalar> bundle = unpack<Scalar>(x, spec);
  RankReport report;
  report.tolerance = static_cast<double>(tol);
  report.pass = true;
  for (int i = 0; i < spec.num_users; ++i) {
    const ComplexMatrixX<Scalar> direct =
        bundle.decoders[i].adjoint() * channels(i, i) * bundle.precoders[i];
    Eigen::JacobiSVD<ComplexMatrixX<Scalar>> svd(direct);
    const auto& sigma = svd.singularValues();
    const Scalar largest = sigma.size() > 0 ? sigma[0] : Scalar(0);
    int rank = 0;
    for (Eigen::Index s = 0; s < sigma.size(); ++s) {
      if (sigma[s] > tol * largest) ++rank;
    }
    const bool ok = rank == spec.streams[i];
    report.achieved_rank.push_back(rank);
    report.user_pass.push_back(ok ? 1 : 0);
    report.pass = report.pass && ok;
  }
  return report;
}

}  // namespace ialign
