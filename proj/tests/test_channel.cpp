#include <doctest.h>

#include <complex>

#include "ialign/channel.hpp"
#include "ialign/problem.hpp"
#include "ialign/rng.hpp"

using namespace ialign;

TEST_SUITE("channel") {
  TEST_CASE("link shapes follow the per-user antenna counts") {
    const ProblemSpec spec = make_problem(3, {2, 3, 4}, {4, 2, 3}, {1, 1, 1});
    const ChannelSet<double> channels = generate_channels<double>(spec, 11);
    CHECK(channels.num_users == 3);
    for (int rx = 0; rx < 3; ++rx) {
      for (int tx = 0; tx < 3; ++tx) {
        CHECK(channels(rx, tx).rows() == spec.rx_antennas[rx]);
        CHECK(channels(rx, tx).cols() == spec.tx_antennas[tx]);
      }
    }
  }

  TEST_CASE("same seed reproduces the realization, different seeds do not") {
    const ProblemSpec spec = make_problem(3, 2, 2, 1);
    const ChannelSet<double> a = generate_channels<double>(spec, 42);
    const ChannelSet<double> b = generate_channels<double>(spec, 42);
    const ChannelSet<double> c = generate_channels<double>(spec, 43);
    for (std::size_t l = 0; l < a.links.size(); ++l) {
      CHECK(a.links[l] == b.links[l]);
    }
    CHECK(a.links[0] != c.links[0]);
  }

  TEST_CASE("cross links are distinct realizations") {
    const ProblemSpec spec = make_problem(2, 3, 3, 1);
    const ChannelSet<double> channels = generate_channels<double>(spec, 5);
    CHECK(channels(0, 1) != channels(1, 0));
    CHECK(channels(0, 0) != channels(1, 1));
  }

  TEST_CASE("entries have zero mean and unit variance") {
    // 317 * 317 = 100489 samples; the sample mean of |h|^2 concentrates
    // around 1 with standard error ~ 1 / sqrt(100489) ~ 0.0032.
    const ProblemSpec spec = make_problem(1, 317, 317, 1);
    const ChannelSet<double> channels = generate_channels<double>(spec, 2024);
    const auto& h = channels(0, 0);
    const double count = static_cast<double>(h.size());
    const double power = h.squaredNorm() / count;
    CHECK(power == doctest::Approx(1.0).epsilon(0.02));
    const std::complex<double> mean = h.sum() / count;
    CHECK(std::abs(mean) < 0.02);
    const double re_var = h.real().array().square().sum() / count;
    const double im_var = h.imag().array().square().sum() / count;
    CHECK(re_var == doctest::Approx(0.5).epsilon(0.05));
    CHECK(im_var == doctest::Approx(0.5).epsilon(0.05));
  }

  TEST_CASE("channel draws come from a stream separate from the swarm stream") {
    Rng channel_stream = Rng::stream(7, kChannelStream);
    Rng swarm_stream = Rng::stream(7, kSwarmStream);
    CHECK(channel_stream.next() != swarm_stream.next());
  }
}
