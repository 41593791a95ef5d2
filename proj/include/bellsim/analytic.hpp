#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>

namespace bellsim {

// Detection-region geometry of the ideal threshold polarimeter in the
// no-double-click regime 1/2 < Phi/E0 < 1.
//
// The click condition E+ > Phi is equivalent to
//   cos 2(lambda - phi) > 2*Phi/E0 - 1 = 2*gamma,
// so the cosine threshold is twice gamma = Phi/E0 - 1/2. Per half-period
// of lambda - phi there is one detection arc of size tau and one
// non-detection arc of size theta, with
//   theta = arcsin(cosine_threshold),   tau + theta = pi/2.
struct RegionGeometry {
  double gamma;
  double cosine_threshold;
  double theta;
  double tau;
};

// Throws std::domain_error (naming the violated bound) unless
// 1/2 < work_function/e0 < 1.
RegionGeometry geometry_from_thresholds(double e0, double work_function);

// Probabilities of the four exclusive single-single coincidence outcomes
// over uniform lambda, i.e. the arc measures divided by 2*pi.
struct CoincidenceProbs {
  double p_pp, p_pm, p_mp, p_mm;
  double total() const { return p_pp + p_pm + p_mp + p_mm; }
};

// Folds an analyzer-angle difference into [0, pi/2] using evenness and the
// sign-flip anti-period: E(-x) = E(x), E(x + pi/2) = -E(x).
double fold_delta_phi(double delta_phi);

CoincidenceProbs coincidence_probs(double delta_phi, const RegionGeometry& geom);

// Piecewise correlation of the ideal polarimeter pair:
//   E = 1                                for |dphi| <= theta,
//   E = (-2*dphi + tau + theta)/(tau - theta)  for theta < |dphi| <= tau,
//   E = -1                               for tau < |dphi| <= pi/2,
// extended to all angles by the fold above. At theta == tau the linear
// branch collapses and the continuous limit sign(cos 2*dphi) is returned.
// For theta > tau coincidences are impossible on |dphi| in [tau, theta];
// the correlation is undefined there and NaN is returned.
double piecewise_correlation(double delta_phi, const RegionGeometry& geom);

using AnglePair = std::pair<double, double>;  // (phi_1, phi_2)
using AngleSet = std::array<AnglePair, 4>;

// {(0, pi/8), (0, -pi/8), (pi/4, pi/8), (pi/4, -pi/8)}
AngleSet standard_chsh_angles();

struct ChshResult {
  double s_value;  // |t1 + t2 + t3 - t4|, NaN if any term undefined
  AngleSet angle_set;
  std::array<double, 4> term_correlations;
  bool defined() const;
};

// Evaluates S = |E(a1,b1) + E(a2,b2) + E(a3,b3) - E(a4,b4)| for an
// arbitrary correlation function of the two analyzer settings.
ChshResult chsh(const std::function<double(double, double)>& correlation,
                const AngleSet& angle_set = standard_chsh_angles());

// Independent numerical oracle: integrates the four coincidence indicator
// functions of ideal_measure over a uniform midpoint lambda grid. Trials
// where either station records a Null or a Double are not coincidences.
// grid_points must be >= 10000.
CoincidenceProbs brute_force_probs(double delta_phi, double e0, double work_function,
                                   std::int64_t grid_points);

// (pp + mm - pm - mp) / (pp + mm + pm + mp) from brute_force_probs;
// NaN when the grid contains no coincidence at all.
double brute_force_correlation(double delta_phi, double e0, double work_function,
                               std::int64_t grid_points);

}  // namespace bellsim
