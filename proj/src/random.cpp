#include "bellsim/random.hpp"

#include <cmath>
#include <numbers>

namespace bellsim {

double RandomStream::exponential(double mean) noexcept {
  // uniform() < 1, so the log argument stays in (0, 1].
  return -mean * std::log(1.0 - uniform());
}

double RandomStream::normal(double mean, double stddev) noexcept {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t RandomStream::poisson(double mean) noexcept {
  if (!(mean > 0.0)) return 0;
  if (mean <= kPoissonDirectLimit) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }
  const double draw = normal(mean, std::sqrt(mean));
  if (draw < 0.0) return 0;
  return static_cast<std::uint64_t>(draw + 0.5);
}

}  // namespace bellsim
