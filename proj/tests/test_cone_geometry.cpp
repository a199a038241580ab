#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "conefold/cone_geometry.hpp"
#include "conefold/parsing.hpp"

using namespace conefold;

TEST_CASE("tension factory validates its range") {
  CHECK(make_string_tension(0.0).g_mu == 0.0);
  CHECK(make_string_tension(0.2499).g_mu == 0.2499);
  CHECK(make_string_tension(-0.1, "ctf", true).g_mu == -0.1);
  CHECK_THROWS_AS(make_string_tension(0.25), std::invalid_argument);
  CHECK_THROWS_AS(make_string_tension(1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_string_tension(-1e-9), std::invalid_argument);
  CHECK_THROWS_AS(make_string_tension(std::nan("")), std::invalid_argument);
  // no lower bound with allow_negative: any angle excess is a valid cone
  CHECK(make_string_tension(-0.3, "", true).g_mu == -0.3);
  CHECK(is_physical_tension({1e-6, ""}));
  CHECK(!is_physical_tension({-1e-6, ""}));
  CHECK(!is_physical_tension({0.25, ""}));
}

TEST_CASE("deficit follows 8*pi*gmu") {
  CHECK(deficit_from_tension({0.0, ""}) == 0.0);
  CHECK(deficit_from_tension({1e-6, ""}) ==
        doctest::Approx(2.513274e-5).epsilon(1e-6));
  CHECK(deficit_from_tension({3.2e-7, ""}) ==
        doctest::Approx(8.042477e-6).epsilon(1e-6));
  CHECK_THROWS_AS(deficit_from_tension({0.25, ""}), std::invalid_argument);
}

TEST_CASE("cone point carries five consistent views") {
  auto flat = cone_point_from_tension({0.0, ""});
  CHECK(flat.deficit_delta == 0.0);
  CHECK(flat.cone_angle_theta == kTwoPi);
  CHECK(flat.beta == 0.0);
  CHECK(flat.order_n == 0.0);

  auto micro = cone_point_from_tension({1e-6, ""});
  CHECK(micro.beta == -4e-6);

  auto boundary = cone_point_from_tension({1.0 / 16.0, ""});
  CHECK(boundary.cone_angle_theta == 1.5 * kPi);

  std::mt19937 rng(411);
  std::uniform_real_distribution<double> dist(0.0, 0.2499);
  for (int i = 0; i < 500; ++i) {
    auto p = cone_point_from_tension({dist(rng), ""});
    CHECK(p.cone_angle_theta + p.deficit_delta ==
          doctest::Approx(kTwoPi).epsilon(1e-15));
    CHECK(p.cone_angle_theta == doctest::Approx(kTwoPi * (p.beta + 1.0)).epsilon(1e-15));
    CHECK(p.cone_angle_theta > 0.0);
  }
}

TEST_CASE("deficit round trip") {
  CHECK(tension_from_deficit(0.0).g_mu == 0.0);
  CHECK(tension_from_deficit(kPi).g_mu == 0.125);
  CHECK_THROWS_AS(tension_from_deficit(kTwoPi), std::invalid_argument);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 0.2);
  for (int i = 0; i < 500; ++i) {
    const double g = dist(rng);
    const double back = tension_from_deficit(deficit_from_tension({g, ""})).g_mu;
    CHECK(back == doctest::Approx(g).epsilon(1e-15));
  }
}

TEST_CASE("gauss-bonnet residual on reference surfaces") {
  CHECK(gauss_bonnet_residual(make_flat_cone_surface(1, {})) == 0.0);
  CHECK(gauss_bonnet_residual(make_flat_cone_surface(0, {})) ==
        doctest::Approx(4.0 * kPi).epsilon(1e-15));

  std::vector<ConicalPoint> points;
  for (int i = 0; i < 10; ++i)
    points.push_back(cone_point_from_tension({1.7e-7, "spt"}));
  auto surface = make_flat_cone_surface(1, points);
  const double residual = gauss_bonnet_residual(surface);

  // independent oracle in the literal theta - 2*pi form
  double oracle = kTwoPi * euler_characteristic(surface);
  for (const auto& p : surface.points) oracle += p.cone_angle_theta - kTwoPi;
  CHECK(residual == doctest::Approx(oracle).epsilon(1e-12));
  CHECK(residual == doctest::Approx(-8.0 * kPi * 1.7e-6).epsilon(1e-12));

  auto disconnected = make_flat_cone_surface(1, {}, false);
  CHECK_THROWS_AS(gauss_bonnet_residual(disconnected), std::invalid_argument);
}

TEST_CASE("genus scan matches the residual formula") {
  CHECK(admissible_genus({}, 1e-6) == std::set<int>{1});

  std::vector<StringTension> spt(10, {1.7e-7, ""});
  CHECK(admissible_genus(spt, 1e-3) == std::set<int>{1});

  CHECK(admissible_genus({{0.125, ""}}, 1e-6).empty());

  // two deficits of -2*pi push the flat genus to 2
  std::vector<StringTension> negative(2, {-0.25, ""});
  CHECK(admissible_genus(negative, 1e-9) == std::set<int>{2});

  CHECK_THROWS_AS(admissible_genus({}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(admissible_genus({}, -1.0), std::invalid_argument);

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 0.24);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<StringTension> tensions;
    for (int i = 0; i < 5; ++i) tensions.push_back({dist(rng), ""});
    CHECK(admissible_genus(tensions, 1.0).size() <= 1);
  }
}

TEST_CASE("chi conventions differ by 2*pi") {
  std::vector<StringTension> spt(10, {1.7e-7, ""});
  CHECK(chi_from_tensions(spt, ChiConvention::derived) ==
        doctest::Approx(6.8e-6).epsilon(1e-12));
  CHECK(chi_from_tensions(spt, ChiConvention::paper) ==
        doctest::Approx(8.0 * kPi * 1.7e-6).epsilon(1e-12));
  CHECK(chi_from_tensions({}, ChiConvention::derived) == 0.0);
  CHECK(chi_from_tensions({}, ChiConvention::paper) == 0.0);
  CHECK(chi_from_tensions({{0.0, ""}, {0.0, ""}}, ChiConvention::derived) == 0.0);
}

namespace {

// Picks genus and m-1 deficits, then solves the last one from the flatness
// condition; retries until the solved deficit is itself representable.
FlatConeSurface random_admissible_surface(std::mt19937& rng) {
  std::uniform_int_distribution<int> genus_dist(0, 5);
  std::uniform_int_distribution<int> count_dist(3, 12);
  std::uniform_real_distribution<double> deficit_dist(-kTwoPi + 0.01, kTwoPi - 0.01);

  for (;;) {
    const int genus = genus_dist(rng);
    const int m = count_dist(rng);
    std::vector<double> deficits;
    double sum = 0.0;
    for (int i = 0; i + 1 < m; ++i) {
      deficits.push_back(deficit_dist(rng));
      sum += deficits.back();
    }
    const double target = kTwoPi * (2.0 - 2.0 * genus);
    const double last = target - sum;
    if (std::fabs(last) >= kTwoPi - 0.005) continue;
    deficits.push_back(last);

    std::vector<ConicalPoint> points;
    for (double d : deficits)
      points.push_back(cone_point_from_tension(tension_from_deficit(d)));
    return make_flat_cone_surface(genus, std::move(points), true, true);
  }
}

}  // namespace

TEST_CASE("generator surfaces close the flatness condition") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    auto surface = random_admissible_surface(rng);
    const double residual = gauss_bonnet_residual(surface);
    CHECK(std::fabs(residual) <= 1e-12);

    auto shuffled = surface;
    std::shuffle(shuffled.points.begin(), shuffled.points.end(), rng);
    CHECK(std::fabs(gauss_bonnet_residual(shuffled) - residual) <= 1e-12);
  }
}

TEST_CASE("residual is additive over point subsets") {
  std::mt19937 rng(555);
  std::uniform_real_distribution<double> dist(0.0, 0.24);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ConicalPoint> a, both;
    std::vector<ConicalPoint> b;
    for (int i = 0; i < 4; ++i) a.push_back(cone_point_from_tension({dist(rng), ""}));
    for (int i = 0; i < 3; ++i) b.push_back(cone_point_from_tension({dist(rng), ""}));
    both = a;
    both.insert(both.end(), b.begin(), b.end());

    const double res_a = gauss_bonnet_residual(make_flat_cone_surface(2, a));
    const double res_ab = gauss_bonnet_residual(make_flat_cone_surface(2, both));
    double b_excess = 0.0;
    for (const auto& p : b) b_excess += p.cone_angle_theta - kTwoPi;
    CHECK(res_ab - res_a == doctest::Approx(b_excess).epsilon(1e-12));
  }
}

TEST_CASE("surface files parse with line diagnostics") {
  {
    std::istringstream in(
        "# flat torus with a string pair\n"
        "genus 1\n"
        "\n"
        "point gmu=1.7e-7   # one\n"
        "point gmu=1.7e-7\n");
    auto s = parse_surface_stream(in, "torus.surface");
    CHECK(s.genus == 1);
    CHECK(s.points.size() == 2);
    CHECK(s.points[0].tension.g_mu == 1.7e-7);
  }
  {
    std::istringstream in("genus 0\n");
    auto s = parse_surface_stream(in, "sphere.surface");
    CHECK(s.genus == 0);
    CHECK(s.points.empty());
  }
  {
    std::istringstream in("point gmu=1e-7\ngenus 1\n");
    CHECK_THROWS_WITH_AS(parse_surface_stream(in, "f"),
                         "f:1: point before genus line", ParseError);
  }
  {
    std::istringstream in("genus 1\ngenus 2\n");
    try {
      parse_surface_stream(in, "f");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line_number() == 2);
    }
  }
  {
    std::istringstream in("genus 1\npoint gmu=abc\n");
    CHECK_THROWS_AS(parse_surface_stream(in, "f"), ParseError);
  }
  {
    std::istringstream in("genus 1\npoint gmu=0.3\n");
    CHECK_THROWS_AS(parse_surface_stream(in, "f"), ParseError);
  }
  {
    std::istringstream in("genus 1\npoint gmu=-1e-7\n");
    CHECK_THROWS_AS(parse_surface_stream(in, "f"), ParseError);
  }
  {
    std::istringstream in("genus 1\npoint gmu=-1e-7\n");
    auto s = parse_surface_stream(in, "f", true);
    CHECK(s.points.size() == 1);
    CHECK(s.points[0].deficit_delta < 0.0);
  }
  {
    std::istringstream in("genus -1\n");
    CHECK_THROWS_AS(parse_surface_stream(in, "f"), ParseError);
  }
  {
    std::istringstream in("orbit 12\n");
    CHECK_THROWS_AS(parse_surface_stream(in, "f"), ParseError);
  }
  {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_AS(parse_surface_stream(in, "f"), ParseError);
  }
}
