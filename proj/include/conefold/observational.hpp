#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conefold/cone_geometry.hpp"

namespace conefold {

inline constexpr double kPlanckMassGeV = 1.220890e19;

// Inclusive per-horizon cap on sampled string counts.
inline constexpr int kDefaultStringCountCap = 10;

// Named upper limit on Gmu attributed to one observational campaign.
struct ObservationalBound {
  std::string name;
  double g_mu_max = 0.0;
  std::string source;
};

ObservationalBound make_observational_bound(std::string name, double g_mu_max,
                                            std::string source);

// The four CMB-era limits used throughout reporting, as exact doubles so the
// downstream genus verdict reproduces bit for bit.
const std::vector<ObservationalBound>& builtin_bound_catalog();

// "builtin" or a catalog file: `bound <name> <gmu> "<source>"` per line,
// '#' comments.
std::vector<ObservationalBound> load_bound_catalog(const std::string& path_or_builtin);
std::vector<ObservationalBound> load_bound_catalog_stream(std::istream& in,
                                                          const std::string& origin);

std::optional<ObservationalBound> find_bound(
    const std::vector<ObservationalBound>& catalog, const std::string& name);

// Gmu = (eta / m_pl)^2 for a symmetry-breaking scale eta in GeV. A
// Planck-scale eta lands at Gmu = 1, outside the physical range, so the
// result is deliberately unvalidated; callers gate on is_physical_tension.
StringTension gut_scale_estimate(double eta_gev, double m_pl_gev = kPlanckMassGeV);

enum class SampleDistribution { uniform, fixed_at_bound };

// A hypothetical string network drawn under one bound.
struct NetworkSample {
  std::vector<StringTension> tensions;
  std::uint64_t seed = 0;
  ObservationalBound bound_used;
  SampleDistribution distribution = SampleDistribution::uniform;
};

// Pure function of (seed, count, bound, dist): mt19937_64, uniform draws on
// (0, g_mu_max], fixed_at_bound puts every tension at the limit (the worst
// case for the deficit sum). count in [0, cap]; raise the cap explicitly to
// go past the default rather than silently.
NetworkSample sample_network(std::uint64_t seed, int count,
                             const ObservationalBound& bound,
                             SampleDistribution dist,
                             int cap = kDefaultStringCountCap);

// Nearest even integer; exact odd integers sit between two even neighbors
// and report as a tie (empty optional).
std::optional<int> nearest_even_integer(double x);

// Genus verdict from a tension sum: both chi conventions, the nearest even
// integer of the derived value, and the genus it implies.
struct GenusVerdictReport {
  double sum_g_mu = 0.0;
  double chi_derived = 0.0;            // 4 * sum
  double chi_paper = 0.0;              // 8*pi * sum
  std::optional<int> nearest_even;     // from chi_derived; empty on tie
  std::optional<int> genus_verdict;    // (2 - ne)/2 when >= 0, else none
  std::string convention_notes;
};

GenusVerdictReport euler_bound_report(const NetworkSample& sample);

// The same verdict for a bare tension list, shared by CLI paths that never
// build a NetworkSample.
GenusVerdictReport genus_verdict_from_tensions(
    const std::vector<StringTension>& tensions);

// One line on the two chi conventions and their factor-2*pi gap, for report
// footers. The derived value drives the verdict.
std::string chi_convention_note();

}  // namespace conefold
