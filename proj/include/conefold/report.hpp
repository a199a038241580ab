#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conefold/cone_geometry.hpp"
#include "conefold/flat_structure.hpp"
#include "conefold/foliation.hpp"
#include "conefold/observational.hpp"

namespace conefold {

inline constexpr std::uint64_t kDefaultSeed = 271828;
inline constexpr const char* kSeedEnvVar = "CONEFOLD_SEED";

enum class ChiMode { derived, paper, both };
enum class OutputFormat { text, csv, svg_data };

std::optional<ChiMode> chi_mode_from_name(const std::string& name);
std::string chi_mode_name(ChiMode m);
std::optional<OutputFormat> output_format_from_name(const std::string& name);
std::string output_format_name(OutputFormat f);
std::string order_convention_name(OrderConvention c);

// Everything a command needs, resolved before rendering. Every report starts
// with a one-line echo of these values so a run can be reproduced from its
// own output. Seed precedence: --seed flag, then CONEFOLD_SEED, then default.
struct RunConfig {
  std::uint64_t seed = kDefaultSeed;
  ChiMode chi_mode = ChiMode::both;
  OrderConvention order_convention = OrderConvention::self_consistent;
  OutputFormat format = OutputFormat::text;
  double check_tolerance = kDefaultCheckTolerance;
  double genus_tolerance = kDefaultGenusTolerance;
  std::optional<std::string> bounds_path;  // external catalog override
};

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_value);

std::string config_echo(const RunConfig& cfg);

// 12 significant digits in text reports; 17 (round-trip exact) in CSV.
std::string format_sig12(double x);
std::string format_full(double x);
std::string format_complex_sig12(std::complex<double> z);

struct SurfaceCheckResult {
  FlatConeSurface surface;
  double residual = 0.0;
  bool admissible = false;
  std::string rendered;
};

// `surface check`: parse, residual, verdict. Exit 0 when admissible at the
// config check tolerance, 1 when not; parse failures carry origin:line.
SurfaceCheckResult cmd_surface_check(const std::string& path, const RunConfig& cfg);

struct SurfaceGenusResult {
  std::string rendered;
  bool any_admissible = false;
};

SurfaceGenusResult render_surface_genus(const std::vector<StringTension>& tensions,
                                        const RunConfig& cfg);

std::string render_bounds_report(const std::vector<ObservationalBound>& catalog,
                                 const RunConfig& cfg);

std::string render_network_sample(const NetworkSample& sample, const RunConfig& cfg);

std::string render_natural_coord(const LocalModel& m, std::complex<double> z,
                                 const RunConfig& cfg);

struct QuadratureCheckResult {
  std::string rendered;
  bool within_target = false;
};

QuadratureCheckResult render_quadrature_check(const LocalModel& m,
                                              std::complex<double> z, int samples,
                                              double target_rel,
                                              const RunConfig& cfg);

std::string render_holonomy(const StringTension& t, const PlanarLoop& loop,
                            const RunConfig& cfg);

std::string render_length(double c, const PlanarLoop& loop, const RunConfig& cfg);

std::string render_classification(const FoliationScenario& s, const RunConfig& cfg);

std::string render_enumeration(const RunConfig& cfg);

struct ReportAllResult {
  std::string output;
  GenusVerdictReport verdict;
  int exit_code = 0;
};

// `report all`: the end-to-end replication pipeline, emitting in order the
// GUT estimate, bound catalog, worst-case network, chi under the selected
// conventions with the discrepancy notes, the genus verdict, and the
// scenario classification table. CSV and svg-data formats emit chi vs string
// count for every catalog bound instead. Deterministic for fixed config.
ReportAllResult cmd_report_replication(const RunConfig& cfg);

}  // namespace conefold
