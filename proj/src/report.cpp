#include "conefold/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace conefold {

namespace {

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string genus_set_text(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int g : s) {
    if (!first) out += ", ";
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

std::string verdict_label(const GenusVerdictReport& r) {
  if (!r.nearest_even) return "none (tie between even integers)";
  if (!r.genus_verdict) return "none (nearest even chi above 2)";
  const int g = *r.genus_verdict;
  if (g == 0) return "genus 0 (sphere)";
  if (g == 1) return "genus 1 (torus)";
  return "genus " + std::to_string(g);
}

std::string distribution_name(SampleDistribution d) {
  return d == SampleDistribution::uniform ? "uniform" : "fixed_at_bound";
}

std::string genus_cell(const GenusVerdictReport& r) {
  return r.genus_verdict ? std::to_string(*r.genus_verdict) : "none";
}

const ObservationalBound& most_stringent(
    const std::vector<ObservationalBound>& catalog) {
  return *std::min_element(catalog.begin(), catalog.end(),
                           [](const ObservationalBound& a, const ObservationalBound& b) {
                             return a.g_mu_max < b.g_mu_max;
                           });
}

void append_chi_lines(std::string& out, const GenusVerdictReport& r,
                      const RunConfig& cfg, const std::string& indent) {
  if (cfg.chi_mode != ChiMode::paper)
    out += indent + "chi_derived: " + format_sig12(r.chi_derived) + "\n";
  if (cfg.chi_mode != ChiMode::derived)
    out += indent + "chi_paper: " + format_sig12(r.chi_paper) + "\n";
}

std::string classification_body(const FoliationScenario& s) {
  TopologyVerdict v = classify(s);
  std::string out;
  out += "scenario: " + scenario_key(s) + "\n";
  out += "  compact_leaves: ";
  switch (s.compact_leaves) {
    case CompactLeaves::none: out += "none"; break;
    case CompactLeaves::at_least_one: out += "at_least_one"; break;
    case CompactLeaves::all: out += "all"; break;
  }
  out += "\n";
  out += "  intersects_strings: ";
  out += s.intersects_strings ? yn(*s.intersects_strings) : "n/a";
  out += "\n  leaf_pi1: ";
  switch (s.leaf_pi1) {
    case LeafPi1::finite: out += "finite"; break;
    case LeafPi1::infinite: out += "infinite"; break;
    case LeafPi1::unknown: out += "unknown"; break;
  }
  out += "\n";
  out += std::string("  strings_exist: ") + yn(s.strings_exist) + "\n";
  out += std::string("  observational_constraints_hold: ") +
         yn(s.observational_constraints_hold) + "\n";
  out += std::string("  c2_smooth: ") + yn(s.c2_smooth) + "\n";
  out += "verdict: " + summary_class_name(v.summary_class) + "\n";
  out += std::string("  excluded: ") + yn(v.excluded) + "\n";
  for (size_t i = 0; i < v.claims.size(); ++i) {
    const auto& c = v.claims[i];
    out += "  claim[" + std::to_string(i) + "]: " + c.statement_id + "\n";
    out += "    text: " + c.human_text + "\n";
    out += "    anchor: \"" + c.paper_anchor + "\"\n";
  }
  return out;
}

}  // namespace

std::optional<ChiMode> chi_mode_from_name(const std::string& name) {
  if (name == "derived") return ChiMode::derived;
  if (name == "paper") return ChiMode::paper;
  if (name == "both") return ChiMode::both;
  return std::nullopt;
}

std::string chi_mode_name(ChiMode m) {
  switch (m) {
    case ChiMode::derived: return "derived";
    case ChiMode::paper: return "paper";
    case ChiMode::both: return "both";
  }
  throw std::logic_error("unhandled chi mode");
}

std::optional<OutputFormat> output_format_from_name(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "svg-data") return OutputFormat::svg_data;
  return std::nullopt;
}

std::string output_format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
    case OutputFormat::svg_data: return "svg-data";
  }
  throw std::logic_error("unhandled output format");
}

std::string order_convention_name(OrderConvention c) {
  return c == OrderConvention::paper ? "paper" : "self_consistent";
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_value) {
  if (flag_value) return *flag_value;
  if (const char* env = std::getenv(kSeedEnvVar)) {
    std::uint64_t v = 0;
    const char* last = env + std::char_traits<char>::length(env);
    auto [ptr, ec] = std::from_chars(env, last, v);
    if (ec != std::errc{} || ptr != last)
      throw std::invalid_argument(std::string(kSeedEnvVar) +
                                  " must be an unsigned integer");
    return v;
  }
  return kDefaultSeed;
}

std::string config_echo(const RunConfig& cfg) {
  std::string out = "config: seed=" + std::to_string(cfg.seed);
  out += " chi=" + chi_mode_name(cfg.chi_mode);
  out += " order=" + order_convention_name(cfg.order_convention);
  out += " format=" + output_format_name(cfg.format);
  out += " catalog=" + (cfg.bounds_path ? *cfg.bounds_path : std::string("builtin"));
  out += " check_tol=" + format_sig12(cfg.check_tolerance);
  out += " genus_tol=" + format_sig12(cfg.genus_tolerance);
  return out;
}

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string format_full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex_sig12(std::complex<double> z) {
  return format_sig12(z.real()) + "," + format_sig12(z.imag());
}

SurfaceCheckResult cmd_surface_check(const std::string& path, const RunConfig& cfg) {
  SurfaceCheckResult r;
  r.surface = parse_surface_file(path);
  r.residual = gauss_bonnet_residual(r.surface);
  r.admissible = std::fabs(r.residual) <= cfg.check_tolerance;

  std::vector<StringTension> tensions;
  tensions.reserve(r.surface.points.size());
  for (const auto& p : r.surface.points) tensions.push_back(p.tension);
  const auto genus_set = admissible_genus(tensions, cfg.genus_tolerance);

  std::string out = config_echo(cfg) + "\n";
  out += "surface: " + path + "\n";
  out += "genus: " + std::to_string(r.surface.genus) + "\n";
  out += "points: " + std::to_string(r.surface.points.size()) + "\n";
  out += "residual: " + format_sig12(r.residual) + "\n";
  out += "tolerance: " + format_sig12(cfg.check_tolerance) + "\n";
  out += std::string("admissible: ") + yn(r.admissible) + "\n";
  out += "admissible_genus: " + genus_set_text(genus_set) + " (tolerance " +
         format_sig12(cfg.genus_tolerance) + ")\n";
  r.rendered = std::move(out);
  return r;
}

SurfaceGenusResult render_surface_genus(const std::vector<StringTension>& tensions,
                                        const RunConfig& cfg) {
  const auto genus_set = admissible_genus(tensions, cfg.genus_tolerance);
  const auto verdict = genus_verdict_from_tensions(tensions);

  std::string out = config_echo(cfg) + "\n";
  out += "tensions: " + std::to_string(tensions.size()) + "\n";
  out += "sum_gmu: " + format_sig12(verdict.sum_g_mu) + "\n";
  append_chi_lines(out, verdict, cfg, "");
  out += "nearest_even: " +
         (verdict.nearest_even ? std::to_string(*verdict.nearest_even)
                               : std::string("none")) +
         "\n";
  out += "genus_verdict: " + verdict_label(verdict) + "\n";
  out += "admissible_genus: " + genus_set_text(genus_set) + " (tolerance " +
         format_sig12(cfg.genus_tolerance) + ")\n";
  return {std::move(out), !genus_set.empty()};
}

std::string render_bounds_report(const std::vector<ObservationalBound>& catalog,
                                 const RunConfig& cfg) {
  if (cfg.format == OutputFormat::csv) {
    std::string out = "# " + config_echo(cfg) + "\n";
    out += "name,count,sum_gmu,chi_derived,chi_paper,genus_verdict\n";
    for (const auto& b : catalog) {
      const auto sample =
          sample_network(cfg.seed, kDefaultStringCountCap, b,
                         SampleDistribution::fixed_at_bound);
      const auto r = euler_bound_report(sample);
      out += b.name + "," + std::to_string(kDefaultStringCountCap) + "," +
             format_full(r.sum_g_mu) + "," + format_full(r.chi_derived) + "," +
             format_full(r.chi_paper) + "," + genus_cell(r) + "\n";
    }
    return out;
  }

  std::string out = config_echo(cfg) + "\n";
  out += "bound catalog (" + std::to_string(catalog.size()) + " entries):\n";
  for (const auto& b : catalog)
    out += "  " + b.name + ": gmu_max " + format_sig12(b.g_mu_max) + " \"" +
           b.source + "\"\n";
  out += "worst case per bound (count " + std::to_string(kDefaultStringCountCap) +
         ", fixed_at_bound):\n";
  for (const auto& b : catalog) {
    const auto sample = sample_network(
        cfg.seed, kDefaultStringCountCap, b, SampleDistribution::fixed_at_bound);
    const auto r = euler_bound_report(sample);
    out += "  " + b.name + ": sum_gmu " + format_sig12(r.sum_g_mu);
    if (cfg.chi_mode != ChiMode::paper)
      out += " chi_derived " + format_sig12(r.chi_derived);
    if (cfg.chi_mode != ChiMode::derived)
      out += " chi_paper " + format_sig12(r.chi_paper);
    out += " verdict " + verdict_label(r) + "\n";
  }
  out += chi_convention_note() + "\n";
  return out;
}

std::string render_network_sample(const NetworkSample& sample, const RunConfig& cfg) {
  std::string out = config_echo(cfg) + "\n";
  out += "network sample:\n";
  out += "  bound: " + sample.bound_used.name + " (gmu_max " +
         format_sig12(sample.bound_used.g_mu_max) + ")\n";
  out += "  seed: " + std::to_string(sample.seed) + "\n";
  out += "  distribution: " + distribution_name(sample.distribution) + "\n";
  out += "  count: " + std::to_string(sample.tensions.size()) + "\n";
  double sum = 0.0;
  for (size_t i = 0; i < sample.tensions.size(); ++i) {
    out += "  tension[" + std::to_string(i) +
           "]: " + format_sig12(sample.tensions[i].g_mu) + "\n";
    sum += sample.tensions[i].g_mu;
  }
  out += "  sum_gmu: " + format_sig12(sum) + "\n";
  return out;
}

std::string render_natural_coord(const LocalModel& m, std::complex<double> z,
                                 const RunConfig& cfg) {
  std::string out = config_echo(cfg) + "\n";
  out += "local model: order_n " + format_sig12(m.order_n) + ", coefficient " +
         format_sig12(m.coefficient) + ", half_angle_exponent " +
         format_sig12(m.half_angle_exponent) + "\n";
  out += "total_cone_angle: " + format_sig12(total_cone_angle(m)) + " rad\n";
  const double rounded = std::nearbyint(m.order_n);
  if (rounded == m.order_n && rounded >= -1.0)
    out += "half_planes: " +
           std::to_string(half_plane_count(static_cast<int>(rounded))) + "\n";
  else
    out += "half_planes: n/a (needs integer order >= -1)\n";
  out += "z: " + format_complex_sig12(z) + "\n";
  out += "w_closed_form: " + format_complex_sig12(natural_coordinate_closed_form(m, z)) +
         "\n";
  return out;
}

QuadratureCheckResult render_quadrature_check(const LocalModel& m,
                                              std::complex<double> z, int samples,
                                              double target_rel,
                                              const RunConfig& cfg) {
  const auto closed = natural_coordinate_closed_form(m, z);
  const auto q = natural_coordinate_quadrature(m, z, samples, target_rel);
  const double rel = std::abs(q.value - closed) / std::abs(closed);
  const bool ok = q.converged && rel <= target_rel;

  std::string out = config_echo(cfg) + "\n";
  out += "local model: order_n " + format_sig12(m.order_n) + "\n";
  out += "z: " + format_complex_sig12(z) + "\n";
  out += "w_closed_form: " + format_complex_sig12(closed) + "\n";
  out += "w_quadrature: " + format_complex_sig12(q.value) + "\n";
  out += "samples_used: " + std::to_string(q.samples_used) + "\n";
  out += std::string("converged: ") + yn(q.converged) + "\n";
  out += "rel_error_vs_closed_form: " + format_sig12(rel) + "\n";
  out += "target_rel: " + format_sig12(target_rel) + "\n";
  out += std::string("within_target: ") + yn(ok) + "\n";
  return {std::move(out), ok};
}

std::string render_holonomy(const StringTension& t, const PlanarLoop& loop,
                            const RunConfig& cfg) {
  const auto h = holonomy_around_point(t, loop);
  std::string out = config_echo(cfg) + "\n";
  out += "gmu: " + format_sig12(t.g_mu) + "\n";
  out += "deficit: " + format_sig12(deficit_from_tension(t)) + "\n";
  out += "winding: " + std::to_string(h.winding_number) + "\n";
  out += "rotation: " + format_sig12(h.rotation_angle) + "\n";
  out += "expected: " + format_sig12(h.expected_rotation) + "\n";
  out += "abs_error: " +
         format_sig12(std::fabs(h.rotation_angle - h.expected_rotation)) + "\n";
  return out;
}

std::string render_length(double c, const PlanarLoop& loop, const RunConfig& cfg) {
  std::string out = config_echo(cfg) + "\n";
  out += "c: " + format_sig12(c) + "\n";
  out += "vertices: " + std::to_string(loop.vertices.size()) + "\n";
  out += std::string("closed: ") + yn(loop.closed) + "\n";
  out += "length: " + format_sig12(cone_metric_length(c, loop)) + "\n";
  return out;
}

std::string render_classification(const FoliationScenario& s, const RunConfig& cfg) {
  return config_echo(cfg) + "\n" + classification_body(s);
}

std::string render_enumeration(const RunConfig& cfg) {
  const auto table = enumerate_scenarios();
  std::string out = config_echo(cfg) + "\n";
  out += "scenario enumeration (" + std::to_string(table.size()) + " scenarios):\n";
  std::set<std::string> classes;
  for (const auto& [scenario, verdict] : table) {
    out += "\n" + classification_body(scenario);
    classes.insert(summary_class_name(verdict.summary_class));
  }
  out += "\nverdict classes: ";
  bool first = true;
  for (const auto& c : classes) {
    if (!first) out += ", ";
    out += c;
    first = false;
  }
  out += "\npossibilities beyond the ruled-out case: " +
         std::to_string(classes.count("excluded") ? classes.size() - 1
                                                  : classes.size()) +
         "\n";
  return out;
}

ReportAllResult cmd_report_replication(const RunConfig& cfg) {
  ReportAllResult result;
  const auto catalog =
      load_bound_catalog(cfg.bounds_path ? *cfg.bounds_path : "builtin");
  const auto& stringent = most_stringent(catalog);
  const auto sample =
      sample_network(cfg.seed, kDefaultStringCountCap, stringent,
                     SampleDistribution::fixed_at_bound);
  result.verdict = euler_bound_report(sample);
  result.exit_code = 0;

  if (cfg.format == OutputFormat::csv) {
    std::string out = "# " + config_echo(cfg) + "\n";
    out += "bound,count,chi_derived,chi_paper\n";
    for (const auto& b : catalog) {
      for (int count = 1; count <= kDefaultStringCountCap; ++count) {
        const auto s = sample_network(cfg.seed, count, b,
                                      SampleDistribution::fixed_at_bound);
        const auto r = euler_bound_report(s);
        out += b.name + "," + std::to_string(count) + "," +
               format_full(r.chi_derived) + "," + format_full(r.chi_paper) + "\n";
      }
    }
    result.output = std::move(out);
    return result;
  }

  if (cfg.format == OutputFormat::svg_data) {
    result.output = [&] {
      // chi_derived vs count, one polyline per bound, on a fixed 640x400
      // canvas; everything is computed from catalog numbers so repeated runs
      // emit identical bytes.
      const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#8c564b", "#e377c2"};
      double chi_max = 0.0;
      for (const auto& b : catalog)
        chi_max = std::max(chi_max, 4.0 * kDefaultStringCountCap * b.g_mu_max);
      std::string svg =
          "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 400\">\n";
      svg += "<!-- " + config_echo(cfg) + " -->\n";
      svg += "<title>chi_derived vs string count</title>\n";
      svg += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"400\" fill=\"white\"/>\n";
      svg += "<line x1=\"60\" y1=\"360\" x2=\"620\" y2=\"360\" stroke=\"black\"/>\n";
      svg += "<line x1=\"60\" y1=\"360\" x2=\"60\" y2=\"20\" stroke=\"black\"/>\n";
      svg += "<text x=\"320\" y=\"392\" text-anchor=\"middle\" font-size=\"14\">"
             "string count</text>\n";
      svg += "<text x=\"16\" y=\"16\" font-size=\"14\">chi_derived (max " +
             format_sig12(chi_max) + ")</text>\n";
      int color = 0;
      int legend_y = 40;
      for (const auto& b : catalog) {
        std::string points;
        for (int count = 1; count <= kDefaultStringCountCap; ++count) {
          const double chi = 4.0 * count * b.g_mu_max;
          const double x = 60.0 + (count - 1) * (560.0 / 9.0);
          const double y = 360.0 - (chi / chi_max) * 340.0;
          if (!points.empty()) points += " ";
          points += format_sig12(x) + "," + format_sig12(y);
        }
        const char* stroke = palette[color % 6];
        svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) +
               "\" points=\"" + points + "\"/>\n";
        svg += "<text x=\"72\" y=\"" + std::to_string(legend_y) +
               "\" font-size=\"12\" fill=\"" + stroke + "\">" + b.name + "</text>\n";
        ++color;
        legend_y += 16;
      }
      svg += "</svg>\n";
      return svg;
    }();
    return result;
  }

  std::string out = config_echo(cfg) + "\n";

  out += "\n[1] gut-scale estimate\n";
  const double eta = 1.0e16;
  const auto gut = gut_scale_estimate(eta);
  out += "  eta: " + format_sig12(eta) + " GeV\n";
  out += "  m_pl: " + format_sig12(kPlanckMassGeV) + " GeV\n";
  out += "  gmu_estimate: " + format_sig12(gut.g_mu) + "\n";
  out += std::string("  physical: ") + yn(is_physical_tension(gut)) + "\n";

  out += "\n[2] bound catalog\n";
  for (const auto& b : catalog)
    out += "  " + b.name + ": gmu_max " + format_sig12(b.g_mu_max) + " \"" +
           b.source + "\"\n";

  out += "\n[3] worst-case network (most stringent bound)\n";
  out += "  bound: " + stringent.name + " (gmu_max " +
         format_sig12(stringent.g_mu_max) + ")\n";
  out += "  distribution: " + distribution_name(sample.distribution) + "\n";
  out += "  count: " + std::to_string(sample.tensions.size()) + "\n";
  out += "  seed: " + std::to_string(sample.seed) + "\n";
  out += "  sum_gmu: " + format_sig12(result.verdict.sum_g_mu) + "\n";

  out += "\n[4] euler characteristic\n";
  append_chi_lines(out, result.verdict, cfg, "  ");
  out += "  " + result.verdict.convention_notes + "\n";
  {
    // Convention flag at the worst-case tension: self-consistent reproduces
    // the cone angle identically, the printed-order convention doubles the
    // deficit term.
    const StringTension worst{stringent.g_mu_max, stringent.name};
    const auto mc = local_model_from_tension(worst, OrderConvention::self_consistent);
    const auto mp = local_model_from_tension(worst, OrderConvention::paper);
    const double theta = kTwoPi * (1.0 - 4.0 * worst.g_mu);
    out += "  order self_consistent: n " + format_sig12(mc.order_n) +
           ", cone angle " + format_sig12(total_cone_angle(mc)) +
           (total_cone_angle(mc) == theta ? " = 2*pi*(1-4*gmu) exactly"
                                          : " != 2*pi*(1-4*gmu)") +
           "\n";
    out += "  order paper: n " + format_sig12(mp.order_n) + ", cone angle " +
           format_sig12(total_cone_angle(mp)) +
           " -> factor-2 discrepancy in the deficit term (flagged)\n";
  }

  out += "\n[5] genus verdict\n";
  out += "  nearest_even: " +
         (result.verdict.nearest_even
              ? std::to_string(*result.verdict.nearest_even)
              : std::string("none")) +
         "\n";
  out += "  verdict: " + verdict_label(result.verdict) + "\n";
  std::vector<StringTension> tensions = sample.tensions;
  out += "  admissible_genus: " +
         genus_set_text(admissible_genus(tensions, cfg.genus_tolerance)) +
         " (tolerance " + format_sig12(cfg.genus_tolerance) + ")\n";

  out += "\n[6] topology classification\n";
  const auto table = enumerate_scenarios();
  std::set<std::string> classes;
  for (const auto& [scenario, verdict] : table) {
    classes.insert(summary_class_name(verdict.summary_class));
    out += "  " + scenario_key(scenario) + " -> " +
           summary_class_name(verdict.summary_class);
    for (const auto& c : verdict.claims) out += "\n      anchor: \"" + c.paper_anchor + "\"";
    out += "\n";
  }
  out += "  verdict classes: ";
  bool first = true;
  for (const auto& c : classes) {
    if (!first) out += ", ";
    out += c;
    first = false;
  }
  out += "\n";

  result.output = std::move(out);
  return result;
}

}  // namespace conefold
