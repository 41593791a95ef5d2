#pragma once

#include <numbers>

namespace bellsim {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

// Wraps an angle into [0, 2*pi).
double wrap_two_pi(double angle);

// A classical light pulse: a nonnegative energy and a linear polarization
// direction. Polarization is stored reduced to [0, 2*pi).
struct Pulse {
  double energy;
  double polarization;
  Pulse(double energy_, double polarization_);
};

// Main-axis direction of a polarizing beam splitter. Stored as given (so
// configured settings stay readable); every formula depends on the angle
// only through cos/sin of 2*(lambda - phi), which handles periodicity.
struct PolarizerSetting {
  double angle = 0.0;
  PolarizerSetting() = default;
  explicit PolarizerSetting(double angle_);
};

struct SplitEnergies {
  double transmitted;  // E+ = E0 cos^2(lambda - phi)
  double reflected;    // E- = E0 sin^2(lambda - phi)
};

// Outcome of the idealized threshold polarimeter: one PBS with a bare
// threshold detector on each output.
enum class IdealOutcome { Plus, Minus, Null, Double };

// Malus-law energy split at the PBS. Transmitted + reflected equals the
// pulse energy (to floating-point roundoff).
SplitEnergies malus_split(const Pulse& pulse, const PolarizerSetting& setting);

// Applies the strict click condition E > work_function on both outputs.
// Ties (E == work_function) do not click. Throws std::invalid_argument
// for work_function <= 0.
IdealOutcome ideal_measure(const Pulse& pulse, const PolarizerSetting& setting,
                           double work_function);

}  // namespace bellsim
