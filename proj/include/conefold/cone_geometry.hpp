#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace conefold {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Upper limit on Gmu: the cone angle 2*pi*(1 - 4*Gmu) must stay positive.
inline constexpr double kMaxTension = 0.25;

// Strict admissibility checking vs genus inference from observational sums.
// Observational deficit sums are ~1e-5, far below the 4*pi genus quantum, so
// the inference verdict is insensitive to the looser value.
inline constexpr double kDefaultCheckTolerance = 1e-9;
inline constexpr double kDefaultGenusTolerance = 1e-3;

// Scan cap for admissible_genus. The residual is monotone in genus, so the
// scan short-circuits long before reaching it.
inline constexpr int kGenusSearchCap = 64;

// chi from a tension sum: `derived` is the value forced by the flatness
// condition (chi = 4*sum Gmu), `paper` the published relation
// (chi = 8*pi*sum Gmu). Both are carried through reporting side by side.
enum class ChiConvention { derived, paper };

// Differential order around a string: `self_consistent` makes the local-model
// cone angle (n+2)*pi match 2*pi*(1-4*Gmu); `paper` is the published n = -16*Gmu.
enum class OrderConvention { self_consistent, paper };

// Dimensionless string tension Gmu plus a provenance label.
struct StringTension {
  double g_mu = 0.0;
  std::string label;
};

// Validating factory: finite, Gmu < 1/4, and Gmu >= 0 unless allow_negative.
// Negative tensions model counterfactual conical defects with negative
// deficit; they are only accepted on surfaces flagged allow_negative_deficits.
StringTension make_string_tension(double g_mu, std::string label = {},
                                  bool allow_negative = false);

// True when Gmu lies in the physically meaningful range [0, 1/4).
bool is_physical_tension(const StringTension& t);

// One conical singularity, carrying every view of the same Gmu:
//   deficit      Delta = 8*pi*Gmu
//   cone angle   theta = 2*pi*(1 - 4*Gmu)   (theta + Delta = 2*pi)
//   beta         beta  = -4*Gmu             (theta = 2*pi*(beta + 1))
//   order_n      differential order, per the chosen convention
// All five are stored so the redundancy itself is checkable.
struct ConicalPoint {
  StringTension tension;
  double deficit_delta = 0.0;
  double cone_angle_theta = kTwoPi;
  double beta = 0.0;
  double order_n = 0.0;
};

// Genus + cone points + connectedness. No mesh or atlas: the delta-supported
// curvature lives entirely in the points list.
struct FlatConeSurface {
  int genus = 0;
  std::vector<ConicalPoint> points;
  bool connected = true;
  bool allow_negative_deficits = false;
};

int euler_characteristic(const FlatConeSurface& s);  // chi = 2 - 2*genus

FlatConeSurface make_flat_cone_surface(int genus, std::vector<ConicalPoint> points,
                                       bool connected = true,
                                       bool allow_negative_deficits = false);

double deficit_from_tension(const StringTension& t);

ConicalPoint cone_point_from_tension(
    const StringTension& t,
    OrderConvention order_convention = OrderConvention::self_consistent);

StringTension tension_from_deficit(double delta, std::string label = {});

// 2*pi*chi + sum(theta_i - 2*pi); zero exactly on admissible flat cone
// surfaces. Throws on disconnected surfaces: the condition applies per
// connected component, never to a silent sum across components.
double gauss_bonnet_residual(const FlatConeSurface& s);

// All genus values g in [0, kGenusSearchCap] whose residual with the given
// tensions lies within tolerance.
std::set<int> admissible_genus(const std::vector<StringTension>& tensions,
                               double tolerance);

double chi_from_tensions(const std::vector<StringTension>& tensions,
                         ChiConvention convention);

// Surface files: first content line `genus <n>`, then `point gmu=<x>` lines;
// '#' starts a comment. Numbers are decimal with optional exponent.
FlatConeSurface parse_surface_file(const std::string& path,
                                   bool allow_negative_deficits = false);
FlatConeSurface parse_surface_stream(std::istream& in, const std::string& origin,
                                     bool allow_negative_deficits = false);

}  // namespace conefold
