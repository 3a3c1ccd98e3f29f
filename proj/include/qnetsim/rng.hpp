#pragma once

#include <cstdint>
#include <string_view>

namespace qnetsim {

/// Counter-based random stream. Each draw is a pure function of
/// (seed, stream name, counter), so independently named subsystems cannot
/// perturb each other's sequences no matter in which order they draw.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::string_view name);

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in (0, 1]; safe as a log() argument.
  double uniform_open();
  /// Uniform integer in [0, n); n must be > 0.
  std::uint32_t uniform_below(std::uint32_t n);
  bool bernoulli(double p);
  double gaussian(double sigma = 1.0);
  int poisson(double mean);

private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace qnetsim
