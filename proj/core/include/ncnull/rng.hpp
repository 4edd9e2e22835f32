#pragma once

#include <complex>
#include <cstdint>
#include <functional>

namespace ncnull {

/// Counter-based generator: output k of stream (seed, stream) is a pure
/// function of the three integers, so trials can be replayed independently.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Standard normal via Box-Muller.
  double normal();
  /// Circular complex normal with unit variance.
  std::complex<double> complex_normal();

  std::function<std::uint64_t()> as_function() {
    return [this] { return next(); };
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace ncnull
