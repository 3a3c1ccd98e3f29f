#include "qnetsim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qnetsim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// splitmix64 finalizer; full avalanche on 64 bits.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::string_view name)
    : key_(mix64(mix64(seed + kGolden) ^ fnv1a(name))) {}

std::uint64_t RngStream::next_u64() {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double RngStream::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  return 1.0 - uniform();
}

std::uint32_t RngStream::uniform_below(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("uniform_below: n must be > 0");
  // Rejection sampling on the top 32 bits keeps the draw unbiased.
  const std::uint32_t limit = 0xFFFFFFFFu - (0xFFFFFFFFu % n + 1) % n;
  for (;;) {
    const std::uint32_t v = static_cast<std::uint32_t>(next_u64() >> 32);
    if (v <= limit) return v % n;
  }
}

bool RngStream::bernoulli(double p) {
  return uniform() < p;
}

double RngStream::gaussian(double sigma) {
  // Box-Muller, cosine branch only: two uniforms per sample, no cached state.
  const double u1 = uniform_open();
  const double u2 = uniform();
  return sigma * std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

int RngStream::poisson(double mean) {
  if (mean < 0.0) throw std::invalid_argument("poisson: mean must be >= 0");
  if (mean == 0.0) return 0;
  if (mean < 60.0) {
    // Knuth product method; fine for the per-slot means this simulator uses.
    const double threshold = std::exp(-mean);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform_open();
    } while (p > threshold);
    return k - 1;
  }
  // Gaussian approximation for large means (dark-count aggregates only).
  const double v = mean + std::sqrt(mean) * gaussian();
  return v > 0.0 ? static_cast<int>(std::llround(v)) : 0;
}

}  // namespace qnetsim
