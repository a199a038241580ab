#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace conefold {

// Input side of the classifier: assumptions about the codimension-one
// foliation of the spatial slice near the string worldlines. The engine is
// symbolic; it weighs assumption flags, not manifolds.
enum class CompactLeaves { none, at_least_one, all };
enum class LeafPi1 { finite, infinite, unknown };

struct FoliationScenario {
  CompactLeaves compact_leaves = CompactLeaves::none;
  // Required when compact_leaves == at_least_one, must be absent otherwise.
  std::optional<bool> intersects_strings;
  // Meaningful only for the non-intersecting compact-leaf case.
  LeafPi1 leaf_pi1 = LeafPi1::unknown;
  bool strings_exist = true;
  bool observational_constraints_hold = true;
  bool c2_smooth = true;
};

// Enforces the field-dependency rules; throws std::invalid_argument.
FoliationScenario make_scenario(CompactLeaves leaves,
                                std::optional<bool> intersects_strings = {},
                                LeafPi1 pi1 = LeafPi1::unknown,
                                bool strings_exist = true,
                                bool observational_constraints_hold = true,
                                bool c2_smooth = true);

void validate_scenario(const FoliationScenario& s);

// Output side: one structural statement with its verbatim anchor fragment.
// Anchors are quoted output data and must survive byte for byte into reports.
struct TopologyClaim {
  std::string statement_id;
  std::string human_text;
  std::string paper_anchor;
};

// Coarse verdict class: the three topology possibilities, the Reeb
// exclusion, and `undetermined` for gated-off or open scenarios.
enum class SummaryClass {
  not_simply_connected,
  toroidal,
  small_compact_leaf,
  excluded,
  undetermined,
};

struct TopologyVerdict {
  std::vector<TopologyClaim> claims;
  bool excluded = false;
  SummaryClass summary_class = SummaryClass::undetermined;
};

// Compact-leaf existence gate: true iff pi1 is finite and the foliation is
// at least C2. Hypothesis failure returns false (no conclusion), not error.
bool theorem_compact_leaf_exists(bool pi1_finite, bool smoothness_at_least_c2);

// Reeb stability propagation: a compact leaf with finite pi1 forces every
// leaf to be compact with finite pi1.
bool reeb_stability_propagates(bool compact_leaf_pi1_finite);

TopologyVerdict classify(const FoliationScenario& s);

// Exhaustive walk of the valid scenario lattice (leaf_pi1 = unknown is
// constructible but deliberately not enumerated): five scenarios, four
// verdict classes.
std::vector<std::pair<FoliationScenario, TopologyVerdict>> enumerate_scenarios();

// CLI key vocabulary, in presentation order.
const std::vector<std::string>& scenario_keys();
FoliationScenario scenario_from_key(const std::string& key);
std::string scenario_key(const FoliationScenario& s);

std::string summary_class_name(SummaryClass c);

// Every anchor fragment classify() can emit, for golden-file audits.
const std::vector<std::string>& fixed_anchor_set();

// Anchors tied to string-specific reasoning, as opposed to the general
// three-way split that stands with or without strings.
bool anchor_is_string_dependent(const std::string& anchor);

}  // namespace conefold
