#include "conefold/flat_structure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace conefold {

LocalModel make_local_model(double order_n) {
  if (!std::isfinite(order_n) || order_n <= -2.0)
    throw std::invalid_argument("local model: order must be finite and above -2");
  LocalModel m;
  m.order_n = order_n;
  m.half_angle_exponent = (order_n + 2.0) / 2.0;
  m.coefficient = m.half_angle_exponent * m.half_angle_exponent;
  return m;
}

double order_from_tension(const StringTension& t, OrderConvention convention) {
  if (!std::isfinite(t.g_mu) || t.g_mu >= kMaxTension)
    throw std::invalid_argument("order: tension out of range");
  return convention == OrderConvention::paper ? -16.0 * t.g_mu : -8.0 * t.g_mu;
}

LocalModel local_model_from_tension(const StringTension& t,
                                    OrderConvention convention) {
  return make_local_model(order_from_tension(t, convention));
}

int half_plane_count(int order_n) {
  if (order_n <= -2)
    throw std::invalid_argument("half planes: integer order must be above -2");
  return order_n + 2;
}

double total_cone_angle(const LocalModel& m) {
  return kTwoPi * m.half_angle_exponent;
}

bool pole_admissibility(const StringTension& t, OrderConvention convention) {
  return order_from_tension(t, convention) >= -1.0;
}

std::complex<double> natural_coordinate_closed_form(const LocalModel& m,
                                                    std::complex<double> z) {
  if (z == std::complex<double>(0.0, 0.0)) {
    const double e = m.half_angle_exponent;
    if (e > 0.0 && std::floor(e) == e) return {0.0, 0.0};
    throw std::invalid_argument(
        "natural coordinate: z = 0 needs a positive integer exponent");
  }
  // exp(a log z) rather than pow: keeps the branch choice explicit and
  // matches the quadrature path, which never crosses the cut.
  return std::exp(m.half_angle_exponent * std::log(z));
}

namespace detail {

double wrap_angle_difference(double to, double from) {
  double d = std::remainder(to - from, kTwoPi);
  if (d <= -kPi) d += kTwoPi;
  return d;
}

std::complex<double> radial_quadrature_fixed(const LocalModel& m,
                                             std::complex<double> z,
                                             double base_cutoff, int samples) {
  const double radius = std::abs(z);
  const std::complex<double> zhat = z / radius;
  const double half_order = m.order_n / 2.0;

  // dw = (n+2)/2 * zeta^{n/2} dzeta along zeta = r * zhat, r in
  // [base_cutoff, radius]. The mesh doubles span by span so the r^{n/2}
  // growth near the cutoff never sees a long uniform panel.
  std::vector<double> knots;
  knots.push_back(base_cutoff);
  for (double r = base_cutoff; r < radius;) {
    r = std::min(2.0 * r, radius);
    knots.push_back(r);
  }
  const int spans = static_cast<int>(knots.size()) - 1;
  int per_span = std::max(8, samples / std::max(spans, 1));
  if (per_span % 2 != 0) ++per_span;

  auto integrand = [&](double r) {
    std::complex<double> zeta = r * zhat;
    return m.half_angle_exponent * std::exp(half_order * std::log(zeta)) * zhat;
  };

  std::complex<double> total{0.0, 0.0};
  for (int s = 0; s < spans; ++s) {
    const double a = knots[s];
    const double b = knots[s + 1];
    const double h = (b - a) / per_span;
    std::complex<double> acc = integrand(a) + integrand(b);
    for (int i = 1; i < per_span; ++i)
      acc += (i % 2 == 1 ? 4.0 : 2.0) * integrand(a + h * i);
    total += acc * (h / 3.0);
  }
  return total;
}

}  // namespace detail

QuadratureResult natural_coordinate_quadrature(const LocalModel& m,
                                               std::complex<double> z,
                                               int initial_samples,
                                               double target_rel) {
  if (std::abs(z) <= kQuadratureBaseCutoff)
    throw std::invalid_argument(
        "quadrature: path must avoid the origin (|z| above the base cutoff)");
  if (initial_samples < 16)
    throw std::invalid_argument("quadrature: need at least 16 samples");

  // The integral runs from the cutoff, so add back the closed form on the
  // clipped base segment; the sum estimates w(z) itself and the comparison
  // against the closed form is cutoff-independent.
  const std::complex<double> zhat = z / std::abs(z);
  const std::complex<double> base =
      natural_coordinate_closed_form(m, kQuadratureBaseCutoff * zhat);

  const int start = std::min(initial_samples, kQuadratureSampleCap / 2);
  std::complex<double> prev =
      detail::radial_quadrature_fixed(m, z, kQuadratureBaseCutoff, start);
  double last_rel = 1.0;
  int used = start;
  for (int n = 2 * start; n <= kQuadratureSampleCap; n *= 2) {
    std::complex<double> cur =
        detail::radial_quadrature_fixed(m, z, kQuadratureBaseCutoff, n);
    double scale = std::max(std::abs(cur + base), 1e-300);
    last_rel = std::abs(cur - prev) / scale;
    prev = cur;
    used = n;
    if (last_rel <= target_rel) return {cur + base, last_rel, n, true};
  }
  return {prev + base, last_rel, used, false};
}

PlanarLoop make_planar_loop(std::vector<PolarVertex> vertices, bool closed) {
  if (vertices.size() < 2)
    throw std::invalid_argument("loop: need at least two vertices");
  for (const auto& v : vertices) {
    if (!std::isfinite(v.r) || v.r <= 0.0)
      throw std::invalid_argument("loop: vertex radius must be positive");
    if (!std::isfinite(v.angle) || v.angle < 0.0 || v.angle >= kTwoPi)
      throw std::invalid_argument("loop: vertex angle must lie in [0, 2*pi)");
  }
  return {std::move(vertices), closed};
}

PlanarLoop circular_loop(double r, int segments) {
  if (!std::isfinite(r) || r <= 0.0)
    throw std::invalid_argument("loop: radius must be positive");
  if (segments < 3) throw std::invalid_argument("loop: need at least 3 segments");
  std::vector<PolarVertex> vs;
  vs.reserve(segments);
  for (int i = 0; i < segments; ++i)
    vs.push_back({r, kTwoPi * i / segments});
  return {std::move(vs), true};
}

namespace {

struct Segment {
  double r0, r1, dtheta;
};

std::vector<Segment> loop_segments(const PlanarLoop& loop) {
  if (loop.vertices.size() < 2)
    throw std::invalid_argument("loop: need at least two vertices");
  std::vector<Segment> segs;
  const auto& v = loop.vertices;
  const size_t n = v.size();
  const size_t count = loop.closed ? n : n - 1;
  segs.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % n];
    segs.push_back({a.r, b.r, detail::wrap_angle_difference(b.angle, a.angle)});
  }
  return segs;
}

// Length of one chart-straight segment in ds^2 = dr^2 + (c r dtheta)^2:
// integral of sqrt(dr^2 + a^2 (r0 + t dr)^2) over t in [0,1], a = c|dtheta|.
double segment_length(const Segment& s, double c) {
  const double dr = s.r1 - s.r0;
  const double a = c * std::fabs(s.dtheta);
  if (a == 0.0) return std::fabs(dr);
  if (dr == 0.0) return a * s.r0;
  const double k = std::fabs(dr);
  auto F = [&](double u) {
    return 0.5 * u * std::hypot(k, a * u) +
           (k * k / (2.0 * a)) * std::asinh(a * u / k);
  };
  const double lo = std::min(s.r0, s.r1);
  const double hi = std::max(s.r0, s.r1);
  return (F(hi) - F(lo)) / k;
}

}  // namespace

double cone_metric_length(double c, const PlanarLoop& loop) {
  if (!std::isfinite(c) || c <= 0.0)
    throw std::invalid_argument("length: metric coefficient must be positive");
  for (const auto& v : loop.vertices)
    if (!(v.r > 0.0))
      throw std::invalid_argument("length: vertex radius must be positive");
  double total = 0.0;
  for (const auto& s : loop_segments(loop)) total += segment_length(s, c);
  return total;
}

HolonomyResult holonomy_around_point(const StringTension& t,
                                     const PlanarLoop& loop) {
  const double deficit = deficit_from_tension(t);
  const double c = 1.0 - 4.0 * t.g_mu;
  if (!loop.closed)
    throw std::invalid_argument("holonomy: loop must be closed");

  const auto segs = loop_segments(loop);
  double swept = 0.0;
  double total_abs = 0.0;
  for (const auto& s : segs) {
    swept += s.dtheta;
    total_abs += std::fabs(s.dtheta);
  }
  const long k = std::llround(swept / kTwoPi);
  if (k < 1)
    throw std::invalid_argument(
        "holonomy: loop must wind at least once counterclockwise about the origin");

  // Transport in the orthonormal frame: dV1/ds = c dtheta V2,
  // dV2/ds = -c dtheta V1 per segment (radial legs leave V fixed). The
  // orientation increment is accumulated step by step and left unwrapped, so
  // multi-turn loops keep their full k * deficit rotation.
  double v1 = 1.0, v2 = 0.0;
  double accumulated = 0.0;
  double prev_angle = 0.0;
  for (const auto& s : segs) {
    if (s.dtheta == 0.0) continue;
    const int steps = std::max(
        kHolonomyMinSegmentSteps,
        static_cast<int>(std::lround(kHolonomySteps * std::fabs(s.dtheta) / total_abs)));
    const double h = 1.0 / steps;
    const double w = c * s.dtheta;
    for (int i = 0; i < steps; ++i) {
      const double k1a = w * v2, k1b = -w * v1;
      const double k2a = w * (v2 + 0.5 * h * k1b), k2b = -w * (v1 + 0.5 * h * k1a);
      const double k3a = w * (v2 + 0.5 * h * k2b), k3b = -w * (v1 + 0.5 * h * k2a);
      const double k4a = w * (v2 + h * k3b), k4b = -w * (v1 + h * k3a);
      v1 += h / 6.0 * (k1a + 2.0 * k2a + 2.0 * k3a + k4a);
      v2 += h / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
      const double angle = std::atan2(v2, v1);
      accumulated += detail::wrap_angle_difference(angle, prev_angle);
      prev_angle = angle;
    }
  }

  HolonomyResult out;
  out.winding_number = static_cast<int>(k);
  out.rotation_angle = kTwoPi * static_cast<double>(k) + accumulated;
  out.expected_rotation = static_cast<double>(k) * deficit;
  return out;
}

}  // namespace conefold
