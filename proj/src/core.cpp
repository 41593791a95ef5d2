#include "bellsim/core.hpp"

#include <cmath>
#include <stdexcept>

namespace bellsim {

double wrap_two_pi(double angle) {
  double w = std::fmod(angle, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod can land exactly on 2*pi after the add
  return w;
}

Pulse::Pulse(double energy_, double polarization_) : energy(energy_), polarization(0.0) {
  if (!(std::isfinite(energy_) && energy_ >= 0.0))
    throw std::invalid_argument("Pulse: energy must be finite and >= 0");
  if (!std::isfinite(polarization_))
    throw std::invalid_argument("Pulse: polarization must be finite");
  polarization = wrap_two_pi(polarization_);
}

PolarizerSetting::PolarizerSetting(double angle_) : angle(angle_) {
  if (!std::isfinite(angle_))
    throw std::invalid_argument("PolarizerSetting: angle must be finite");
}

SplitEnergies malus_split(const Pulse& pulse, const PolarizerSetting& setting) {
  const double d = pulse.polarization - setting.angle;
  const double c = std::cos(d);
  const double s = std::sin(d);
  return {pulse.energy * c * c, pulse.energy * s * s};
}

IdealOutcome ideal_measure(const Pulse& pulse, const PolarizerSetting& setting,
                           double work_function) {
  if (!(work_function > 0.0))
    throw std::invalid_argument("ideal_measure: work_function must be > 0");
  const SplitEnergies split = malus_split(pulse, setting);
  const bool plus = split.transmitted > work_function;
  const bool minus = split.reflected > work_function;
  if (plus && minus) return IdealOutcome::Double;
  if (plus) return IdealOutcome::Plus;
  if (minus) return IdealOutcome::Minus;
  return IdealOutcome::Null;
}

}  // namespace bellsim
