#include "conefold/cone_geometry.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "conefold/parsing.hpp"

namespace conefold {

StringTension make_string_tension(double g_mu, std::string label,
                                  bool allow_negative) {
  if (!std::isfinite(g_mu))
    throw std::invalid_argument("string tension: Gmu must be finite");
  if (g_mu >= kMaxTension)
    throw std::invalid_argument("string tension: Gmu must be below 1/4, got " +
                                std::to_string(g_mu));
  if (g_mu < 0.0 && !allow_negative)
    throw std::invalid_argument("string tension: Gmu must be non-negative");
  return {g_mu, std::move(label)};
}

bool is_physical_tension(const StringTension& t) {
  return std::isfinite(t.g_mu) && t.g_mu >= 0.0 && t.g_mu < kMaxTension;
}

int euler_characteristic(const FlatConeSurface& s) { return 2 - 2 * s.genus; }

FlatConeSurface make_flat_cone_surface(int genus, std::vector<ConicalPoint> points,
                                       bool connected, bool allow_negative_deficits) {
  if (genus < 0) throw std::invalid_argument("surface: genus must be non-negative");
  for (const auto& p : points) {
    if (p.deficit_delta < 0.0 && !allow_negative_deficits)
      throw std::invalid_argument(
          "surface: negative deficits need allow_negative_deficits");
    if (p.cone_angle_theta <= 0.0)
      throw std::invalid_argument("surface: cone angle must be positive");
  }
  return {genus, std::move(points), connected, allow_negative_deficits};
}

double deficit_from_tension(const StringTension& t) {
  if (!std::isfinite(t.g_mu) || t.g_mu >= kMaxTension)
    throw std::invalid_argument("deficit: tension out of range");
  return 8.0 * kPi * t.g_mu;
}

ConicalPoint cone_point_from_tension(const StringTension& t,
                                     OrderConvention order_convention) {
  ConicalPoint p;
  p.tension = t;
  p.deficit_delta = deficit_from_tension(t);
  p.beta = -4.0 * t.g_mu;
  p.cone_angle_theta = kTwoPi * (1.0 + p.beta);
  p.order_n = order_convention == OrderConvention::paper ? -16.0 * t.g_mu
                                                         : -8.0 * t.g_mu;
  return p;
}

StringTension tension_from_deficit(double delta, std::string label) {
  if (!std::isfinite(delta))
    throw std::invalid_argument("deficit: must be finite");
  if (delta >= kTwoPi)
    throw std::invalid_argument("deficit: must be below 2*pi");
  return {delta / (8.0 * kPi), std::move(label)};
}

double gauss_bonnet_residual(const FlatConeSurface& s) {
  if (!s.connected)
    throw std::invalid_argument(
        "gauss-bonnet: residual is per connected component; split the surface first");
  // Sum -Delta_i rather than theta_i - 2*pi: the deficit is the stored
  // quantity, and the subtraction would shed digits for tiny tensions.
  double angle_excess = 0.0;
  for (const auto& p : s.points) angle_excess -= p.deficit_delta;
  return kTwoPi * euler_characteristic(s) + angle_excess;
}

std::set<int> admissible_genus(const std::vector<StringTension>& tensions,
                               double tolerance) {
  if (!(tolerance > 0.0))
    throw std::invalid_argument("genus scan: tolerance must be positive");
  double deficit_sum = 0.0;
  for (const auto& t : tensions) deficit_sum += deficit_from_tension(t);

  std::set<int> out;
  for (int g = 0; g <= kGenusSearchCap; ++g) {
    // residual(g) = 2*pi*(2 - 2g) - deficit_sum, strictly decreasing in g.
    double residual = kTwoPi * (2.0 - 2.0 * g) - deficit_sum;
    if (std::fabs(residual) <= tolerance) out.insert(g);
    if (residual < -tolerance) break;
  }
  return out;
}

// Total by design (empty list gives 0): downstream reports feed it
// unconditionally and expect no error path here.
double chi_from_tensions(const std::vector<StringTension>& tensions,
                         ChiConvention convention) {
  double sum = 0.0;
  for (const auto& t : tensions) sum += t.g_mu;
  return convention == ChiConvention::paper ? 8.0 * kPi * sum : 4.0 * sum;
}

FlatConeSurface parse_surface_file(const std::string& path,
                                   bool allow_negative_deficits) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_surface_stream(in, path, allow_negative_deficits);
}

FlatConeSurface parse_surface_stream(std::istream& in, const std::string& origin,
                                     bool allow_negative_deficits) {
  using detail::split_ws;
  using detail::strip_comment;
  using detail::trim;

  bool have_genus = false;
  int genus = 0;
  std::vector<ConicalPoint> points;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    auto tokens = split_ws(line);

    if (tokens[0] == "genus") {
      if (have_genus) throw ParseError(origin, line_no, "duplicate genus line");
      if (tokens.size() != 2)
        throw ParseError(origin, line_no, "expected 'genus <n>'");
      genus = detail::parse_int_or_throw(tokens[1], origin, line_no);
      if (genus < 0) throw ParseError(origin, line_no, "genus must be non-negative");
      have_genus = true;
    } else if (tokens[0] == "point") {
      if (!have_genus)
        throw ParseError(origin, line_no, "point before genus line");
      if (tokens.size() != 2 || tokens[1].substr(0, 4) != "gmu=")
        throw ParseError(origin, line_no, "expected 'point gmu=<x>'");
      double g_mu =
          detail::parse_double_or_throw(tokens[1].substr(4), origin, line_no);
      StringTension t;
      try {
        t = make_string_tension(g_mu, {}, allow_negative_deficits);
      } catch (const std::invalid_argument& e) {
        throw ParseError(origin, line_no, e.what());
      }
      points.push_back(cone_point_from_tension(t));
    } else {
      throw ParseError(origin, line_no,
                       "unknown directive '" + std::string(tokens[0]) + "'");
    }
  }

  if (!have_genus) throw ParseError(origin, line_no, "missing genus line");
  return make_flat_cone_surface(genus, std::move(points), true,
                                allow_negative_deficits);
}

}  // namespace conefold
