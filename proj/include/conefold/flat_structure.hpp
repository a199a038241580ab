#pragma once

#include <complex>
#include <vector>

#include "conefold/cone_geometry.hpp"

namespace conefold {

// Radial quadrature defaults. The integrand r^{n/2} is singular at r = 0 for
// negative orders, so the integral starts at a small cutoff and the exact
// closed form on [0, cutoff] is added back. Sampling is on a dyadic graded
// mesh with composite Simpson per span; sample counts double until two
// successive estimates agree to the target or the cap is hit.
inline constexpr int kDefaultQuadratureSamples = 4096;
inline constexpr int kQuadratureSampleCap = 1 << 20;
inline constexpr double kQuadratureTargetRel = 1e-8;
inline constexpr double kQuadratureBaseCutoff = 1e-6;

// Fixed-step RK4 budget for one full 2*pi transport; per-segment counts are
// prorated by swept angle.
inline constexpr int kHolonomySteps = 8192;
inline constexpr int kHolonomyMinSegmentSteps = 16;

// Local model z^n near one cone point: phi = ((n+2)/2)^2 z^n (dz)^2, natural
// coordinate w = z^{(n+2)/2}, cone angle (n+2)*pi glued from n+2 half-planes.
// half_angle_exponent doubles as the metric coefficient c in
// ds^2 = dr^2 + (c r dtheta)^2 when r is the natural radius |w|.
struct LocalModel {
  double order_n = 0.0;
  double coefficient = 1.0;  // ((n+2)/2)^2
  double half_angle_exponent = 1.0;  // (n+2)/2
};

LocalModel make_local_model(double order_n);  // requires n > -2

LocalModel local_model_from_tension(
    const StringTension& t,
    OrderConvention convention = OrderConvention::self_consistent);

double order_from_tension(const StringTension& t, OrderConvention convention);

// n+2 for integer n > -2; the metric half-planes glued along their boundaries.
int half_plane_count(int order_n);

double total_cone_angle(const LocalModel& m);  // (n+2)*pi

// Whether the tension's differential order satisfies the pole rule
// order >= -1. Under the paper convention the verdict flips exactly at
// Gmu = 1/16; under the self-consistent one at 1/8.
bool pole_admissibility(const StringTension& t, OrderConvention convention);

// w(z) = z^{(n+2)/2}, principal branch (cut along the negative real axis).
// z = 0 is rejected unless the exponent is a positive integer, where w = 0
// needs no branch choice.
std::complex<double> natural_coordinate_closed_form(const LocalModel& m,
                                                    std::complex<double> z);

struct QuadratureResult {
  std::complex<double> value;     // estimate of w(z)
  double estimated_rel_error = 0.0;
  int samples_used = 0;
  bool converged = false;
};

// Radial-path quadrature of dw = (n+2)/2 * zeta^{n/2} dzeta from the base
// cutoff out to z, plus the closed form on the cut-off base segment. Agrees
// with natural_coordinate_closed_form independently of the cutoff.
QuadratureResult natural_coordinate_quadrature(
    const LocalModel& m, std::complex<double> z,
    int initial_samples = kDefaultQuadratureSamples,
    double target_rel = kQuadratureTargetRel);

// Polar vertex of a loop around the cone point at the origin.
struct PolarVertex {
  double r = 1.0;      // > 0
  double angle = 0.0;  // [0, 2*pi)
};

// Piecewise chart-straight loop: segments interpolate linearly in (r, theta),
// each angular step taken along the shortest signed wrap in (-pi, pi].
struct PlanarLoop {
  std::vector<PolarVertex> vertices;
  bool closed = true;
};

PlanarLoop make_planar_loop(std::vector<PolarVertex> vertices, bool closed = true);

// Circle of radius r traversed counterclockwise, as an explicit polygon.
PlanarLoop circular_loop(double r, int segments = 64);

// Length of the piecewise chart-straight path in the cone metric
// ds^2 = dr^2 + (c r dtheta)^2. Each segment is integrated in closed form
// via the standard sqrt(k^2 + a^2 u^2) antiderivative, which beats the
// quadrature tolerance outright.
double cone_metric_length(double c, const PlanarLoop& loop);

struct HolonomyResult {
  double rotation_angle = 0.0;   // unwrapped; equals k * deficit
  int winding_number = 0;        // k >= 1 full turns about the cone point
  double expected_rotation = 0.0;  // k * 8*pi*Gmu
};

// Parallel transport around the loop in the cone metric. The loop must wind
// at least once around the origin. The rotation is accumulated per RK4 step
// and left unwrapped, so k-fold loops report k * Delta rather than its
// mod-2*pi remainder.
HolonomyResult holonomy_around_point(const StringTension& t, const PlanarLoop& loop);

namespace detail {

// Signed angular difference wrapped to (-pi, pi].
double wrap_angle_difference(double to, double from);

// Composite Simpson of zeta^{n/2} along the ray toward z on a graded mesh.
std::complex<double> radial_quadrature_fixed(const LocalModel& m,
                                             std::complex<double> z,
                                             double base_cutoff, int samples);

}  // namespace detail

}  // namespace conefold
