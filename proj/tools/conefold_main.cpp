#include <complex>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conefold/parsing.hpp"
#include "conefold/report.hpp"

namespace {

using namespace conefold;

std::complex<double> parse_complex_arg(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected complex as re,im: '" + text + "'");
  double re, im;
  if (!detail::parse_double(std::string_view(text).substr(0, comma), re) ||
      !detail::parse_double(std::string_view(text).substr(comma + 1), im))
    throw std::invalid_argument("expected complex as re,im: '" + text + "'");
  return {re, im};
}

std::vector<PolarVertex> parse_loop_arg(const std::string& text) {
  std::vector<PolarVertex> vertices;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto colon = text.find(':', pos);
    auto part = text.substr(pos, colon == std::string::npos ? std::string::npos
                                                            : colon - pos);
    auto comma = part.find(',');
    double r, a;
    if (comma == std::string::npos ||
        !detail::parse_double(std::string_view(part).substr(0, comma), r) ||
        !detail::parse_double(std::string_view(part).substr(comma + 1), a))
      throw std::invalid_argument("expected loop as r,a:r,a:... near '" + part + "'");
    vertices.push_back({r, a});
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  return vertices;
}

std::vector<StringTension> parse_tensions_arg(const std::string& text,
                                              bool allow_negative) {
  std::vector<StringTension> tensions;
  size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    auto part = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                            : comma - pos);
    double g;
    if (!detail::parse_double(part, g))
      throw std::invalid_argument("expected tension list g1,g2,... near '" + part +
                                  "'");
    tensions.push_back(make_string_tension(g, {}, allow_negative));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return tensions;
}

OutputFormat parse_format_arg(const std::string& name, bool allow_svg) {
  auto f = output_format_from_name(name);
  if (!f || (*f == OutputFormat::svg_data && !allow_svg))
    throw std::invalid_argument("unsupported format '" + name + "'");
  return *f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flat cone surfaces, string tension bounds, topology verdicts"};
  app.require_subcommand(1);

  int exit_code = 0;

  // Shared flag storage; each callback assembles its own RunConfig.
  std::uint64_t seed_value = 0;
  std::string chi_name = "both";
  std::string order_name = "self_consistent";
  std::string format_name = "text";
  std::string config_path;
  double check_tol = kDefaultCheckTolerance;
  double genus_tol = kDefaultGenusTolerance;

  auto add_seed = [&](CLI::App* cmd) {
    return cmd->add_option("--seed", seed_value, "sample seed (overrides CONEFOLD_SEED)");
  };
  auto base_config = [&](CLI::Option* seed_opt) {
    RunConfig cfg;
    cfg.seed = resolve_seed(seed_opt && seed_opt->count()
                                ? std::optional<std::uint64_t>(seed_value)
                                : std::nullopt);
    auto chi = chi_mode_from_name(chi_name);
    if (!chi) throw std::invalid_argument("unknown chi convention '" + chi_name + "'");
    cfg.chi_mode = *chi;
    if (order_name == "paper")
      cfg.order_convention = OrderConvention::paper;
    else if (order_name == "self_consistent")
      cfg.order_convention = OrderConvention::self_consistent;
    else
      throw std::invalid_argument("unknown order convention '" + order_name + "'");
    cfg.check_tolerance = check_tol;
    cfg.genus_tolerance = genus_tol;
    if (!config_path.empty()) cfg.bounds_path = config_path;
    return cfg;
  };

  // surface check | surface genus
  auto* surface = app.add_subcommand("surface", "flat cone surface checks");
  surface->require_subcommand(1);

  std::string surface_path;
  auto* check = surface->add_subcommand("check", "Gauss-Bonnet admissibility of a surface file");
  check->add_option("file", surface_path, "surface description file")->required();
  check->add_option("--tolerance", check_tol, "admissibility tolerance");
  check->add_option("--genus-tolerance", genus_tol, "genus scan tolerance");
  check->callback([&] {
    auto r = cmd_surface_check(surface_path, base_config(nullptr));
    std::cout << r.rendered;
    if (!r.admissible) exit_code = 1;
  });

  std::string tension_list;
  bool allow_negative = false;
  auto* genus = surface->add_subcommand("genus", "admissible genus for a tension list");
  genus->add_option("--tensions", tension_list, "comma-separated Gmu values")->required();
  genus->add_option("--genus-tolerance", genus_tol, "genus scan tolerance");
  genus->add_option("--chi", chi_name, "chi convention: derived|paper|both");
  genus->add_flag("--allow-negative", allow_negative, "admit negative tensions");
  genus->callback([&] {
    auto tensions = parse_tensions_arg(tension_list, allow_negative);
    auto r = render_surface_genus(tensions, base_config(nullptr));
    std::cout << r.rendered;
    if (!r.any_admissible) exit_code = 1;
  });

  // bounds report
  auto* bounds = app.add_subcommand("bounds", "observational bound catalog");
  bounds->require_subcommand(1);
  auto* bounds_report = bounds->add_subcommand("report", "catalog and worst-case chi");
  bounds_report->add_option("--config", config_path, "bound catalog file");
  bounds_report->add_option("--format", format_name, "text|csv");
  bounds_report->add_option("--chi", chi_name, "chi convention: derived|paper|both");
  auto* bounds_seed = add_seed(bounds_report);
  bounds_report->callback([&] {
    auto cfg = base_config(bounds_seed);
    cfg.format = parse_format_arg(format_name, false);
    auto catalog = load_bound_catalog(cfg.bounds_path ? *cfg.bounds_path : "builtin");
    std::cout << render_bounds_report(catalog, cfg);
  });

  // network sample
  auto* network = app.add_subcommand("network", "string network sampling");
  network->require_subcommand(1);
  auto* sample_cmd = network->add_subcommand("sample", "draw a network under a bound");
  int sample_count = 0;
  std::string bound_name;
  std::string dist_name = "uniform";
  bool override_cap = false;
  auto* sample_seed = add_seed(sample_cmd);
  sample_cmd->add_option("--count", sample_count, "number of strings")->required();
  sample_cmd->add_option("--bound", bound_name, "catalog bound name")->required();
  sample_cmd->add_option("--dist", dist_name, "uniform|fixed");
  sample_cmd->add_option("--config", config_path, "bound catalog file");
  sample_cmd->add_flag("--override-cap", override_cap, "allow counts past the default cap");
  sample_cmd->callback([&] {
    auto cfg = base_config(sample_seed);
    auto catalog = load_bound_catalog(cfg.bounds_path ? *cfg.bounds_path : "builtin");
    auto bound = find_bound(catalog, bound_name);
    if (!bound)
      throw std::invalid_argument("bound '" + bound_name + "' not in the catalog");
    SampleDistribution dist;
    if (dist_name == "uniform")
      dist = SampleDistribution::uniform;
    else if (dist_name == "fixed" || dist_name == "fixed_at_bound")
      dist = SampleDistribution::fixed_at_bound;
    else
      throw std::invalid_argument("unknown distribution '" + dist_name + "'");
    const int cap = override_cap ? std::max(sample_count, kDefaultStringCountCap)
                                 : kDefaultStringCountCap;
    auto sample = sample_network(cfg.seed, sample_count, *bound, dist, cap);
    std::cout << render_network_sample(sample, cfg);
  });

  // flat natural-coord | flat quadrature-check
  auto* flat = app.add_subcommand("flat", "quadratic-differential local models");
  flat->require_subcommand(1);
  double order_n = 0.0;
  std::string z_text;
  int samples = kDefaultQuadratureSamples;
  double target_rel = kQuadratureTargetRel;

  auto* natural = flat->add_subcommand("natural-coord", "closed-form natural coordinate");
  natural->add_option("--order", order_n, "differential order n > -2")->required();
  natural->add_option("--z", z_text, "evaluation point re,im")->required();
  natural->callback([&] {
    auto m = make_local_model(order_n);
    std::cout << render_natural_coord(m, parse_complex_arg(z_text), base_config(nullptr));
  });

  auto* quad = flat->add_subcommand("quadrature-check", "quadrature vs closed form");
  quad->add_option("--order", order_n, "differential order n > -2")->required();
  quad->add_option("--z", z_text, "evaluation point re,im")->required();
  quad->add_option("--samples", samples, "initial sample count");
  quad->add_option("--target", target_rel, "relative error target");
  quad->callback([&] {
    auto m = make_local_model(order_n);
    auto r = render_quadrature_check(m, parse_complex_arg(z_text), samples,
                                     target_rel, base_config(nullptr));
    std::cout << r.rendered;
    if (!r.within_target) exit_code = 1;
  });

  // probe holonomy | probe length
  auto* probe = app.add_subcommand("probe", "numerical probes of the cone metric");
  probe->require_subcommand(1);
  double gmu = 0.0;
  double metric_c = 1.0;
  std::string loop_text;
  bool closed_path = false;

  auto* holonomy = probe->add_subcommand("holonomy", "parallel-transport rotation");
  holonomy->add_option("--gmu", gmu, "string tension Gmu")->required();
  holonomy->add_option("--loop", loop_text, "closed loop r,a:r,a:...")->required();
  holonomy->callback([&] {
    auto loop = make_planar_loop(parse_loop_arg(loop_text), true);
    auto t = make_string_tension(gmu);
    std::cout << render_holonomy(t, loop, base_config(nullptr));
  });

  auto* length = probe->add_subcommand("length", "cone-metric length of a path");
  length->add_option("--c", metric_c, "metric coefficient c > 0")->required();
  length->add_option("--loop", loop_text, "path r,a:r,a:...")->required();
  length->add_flag("--closed", closed_path, "close the path back to the first vertex");
  length->callback([&] {
    auto loop = make_planar_loop(parse_loop_arg(loop_text), closed_path);
    std::cout << render_length(metric_c, loop, base_config(nullptr));
  });

  // classify
  auto* classify_cmd = app.add_subcommand("classify", "foliation scenario verdicts");
  std::string scenario_key_arg;
  bool enumerate_all = false;
  bool no_strings = false;
  bool no_observational = false;
  bool non_c2 = false;
  classify_cmd->add_option("--scenario", scenario_key_arg,
                           "no-compact | one-nonintersecting-finite | "
                           "one-nonintersecting-infinite | one-intersecting | all-compact");
  classify_cmd->add_flag("--enumerate", enumerate_all, "classify every scenario");
  classify_cmd->add_flag("--no-strings", no_strings, "drop the strings-exist hypothesis");
  classify_cmd->add_flag("--no-observational", no_observational,
                         "drop the observational-constraints hypothesis");
  classify_cmd->add_flag("--non-c2", non_c2, "drop the C2 smoothness hypothesis");
  classify_cmd->callback([&] {
    auto cfg = base_config(nullptr);
    if (enumerate_all && !scenario_key_arg.empty())
      throw std::invalid_argument("--scenario and --enumerate are exclusive");
    if (enumerate_all) {
      std::cout << render_enumeration(cfg);
      return;
    }
    if (scenario_key_arg.empty())
      throw std::invalid_argument("need --scenario <key> or --enumerate");
    auto s = scenario_from_key(scenario_key_arg);
    s.strings_exist = !no_strings;
    s.observational_constraints_hold = !no_observational;
    s.c2_smooth = !non_c2;
    std::cout << render_classification(s, cfg);
  });

  // report all
  auto* report = app.add_subcommand("report", "end-to-end replication report");
  report->require_subcommand(1);
  auto* report_all = report->add_subcommand("all", "full pipeline report");
  report_all->add_option("--format", format_name, "text|csv|svg-data");
  report_all->add_option("--chi", chi_name, "chi convention: derived|paper|both");
  report_all->add_option("--order", order_name, "order convention: self_consistent|paper");
  report_all->add_option("--config", config_path, "bound catalog file");
  report_all->add_option("--genus-tolerance", genus_tol, "genus scan tolerance");
  auto* report_seed = add_seed(report_all);
  report_all->callback([&] {
    auto cfg = base_config(report_seed);
    cfg.format = parse_format_arg(format_name, true);
    auto r = cmd_report_replication(cfg);
    std::cout << r.output;
    exit_code = r.exit_code;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const conefold::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
