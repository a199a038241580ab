#include "conefold/foliation.hpp"

#include <algorithm>
#include <stdexcept>

namespace conefold {

namespace {

// The quote anchors are fixed output data; reports and golden tests compare
// them byte for byte, so they must never be reworded or reformatted.
constexpr const char* kAnchorPi1Infinite = "$\\pi_1(\\Sigma)$ is infinite";
constexpr const char* kAnchorNotSimplyConnected =
    "$\\Sigma$ is not simply-connected";
constexpr const char* kAnchorReebExclusion =
    "Reeb stability removes the possibility";
constexpr const char* kAnchorSmallLeaf = "would have to be small (cosmologically)";
constexpr const char* kAnchorReebComponent = "foliated internally by planes";
constexpr const char* kAnchorAllTori =
    "the surfaces transverse to these strings are tori";
constexpr const char* kAnchorThreeWay = "three possibilities for its topology";

TopologyClaim claim(std::string id, std::string text, std::string anchor) {
  return {std::move(id), std::move(text), std::move(anchor)};
}

// Verdict for scenarios whose hypotheses are switched off: says so
// explicitly instead of going silent, and leans only on the neutral
// three-way anchor.
TopologyVerdict hypotheses_not_met() {
  TopologyVerdict v;
  v.claims.push_back(claim(
      "hypotheses-not-met",
      "required hypotheses are switched off in this scenario; no specific "
      "conclusion is drawn, only the general three-way split applies",
      kAnchorThreeWay));
  v.excluded = false;
  v.summary_class = SummaryClass::undetermined;
  return v;
}

}  // namespace

FoliationScenario make_scenario(CompactLeaves leaves,
                                std::optional<bool> intersects_strings,
                                LeafPi1 pi1, bool strings_exist,
                                bool observational_constraints_hold,
                                bool c2_smooth) {
  FoliationScenario s;
  s.compact_leaves = leaves;
  s.intersects_strings = intersects_strings;
  s.leaf_pi1 = pi1;
  s.strings_exist = strings_exist;
  s.observational_constraints_hold = observational_constraints_hold;
  s.c2_smooth = c2_smooth;
  validate_scenario(s);
  return s;
}

void validate_scenario(const FoliationScenario& s) {
  if (s.compact_leaves == CompactLeaves::at_least_one) {
    if (!s.intersects_strings.has_value())
      throw std::invalid_argument(
          "scenario: intersects_strings is required when a compact leaf exists");
  } else if (s.intersects_strings.has_value()) {
    throw std::invalid_argument(
        "scenario: intersects_strings only applies to the at_least_one case");
  }
}

bool theorem_compact_leaf_exists(bool pi1_finite, bool smoothness_at_least_c2) {
  return pi1_finite && smoothness_at_least_c2;
}

bool reeb_stability_propagates(bool compact_leaf_pi1_finite) {
  return compact_leaf_pi1_finite;
}

TopologyVerdict classify(const FoliationScenario& s) {
  validate_scenario(s);
  const bool strings_ok = s.strings_exist && s.observational_constraints_hold;

  TopologyVerdict v;

  switch (s.compact_leaves) {
    case CompactLeaves::none: {
      // Contrapositive of the compact-leaf theorem; needs the C2 hypothesis
      // but no string input.
      if (!s.c2_smooth) return hypotheses_not_met();
      v.claims.push_back(claim(
          "pi1-infinite",
          "no compact leaf forces the fundamental group of the slice to be "
          "infinite",
          kAnchorPi1Infinite));
      v.claims.push_back(claim("not-simply-connected",
                               "in particular the slice is not simply-connected",
                               kAnchorNotSimplyConnected));
      v.summary_class = SummaryClass::not_simply_connected;
      return v;
    }

    case CompactLeaves::at_least_one: {
      if (!strings_ok) return hypotheses_not_met();
      if (!*s.intersects_strings) {
        switch (s.leaf_pi1) {
          case LeafPi1::finite:
            // Reeb stability would force every leaf compact with finite pi1,
            // contradicting the genus-1 requirement on string-transverse
            // surfaces.
            if (!s.c2_smooth) return hypotheses_not_met();
            v.claims.push_back(claim(
                "reeb-exclusion",
                "a single non-intersecting compact leaf with finite "
                "fundamental group is ruled out",
                kAnchorReebExclusion));
            v.excluded = true;
            v.summary_class = SummaryClass::excluded;
            return v;
          case LeafPi1::infinite:
            v.claims.push_back(claim(
                "small-compact-leaf",
                "a non-intersecting compact leaf can exist but must be "
                "cosmologically small",
                kAnchorSmallLeaf));
            v.summary_class = SummaryClass::small_compact_leaf;
            return v;
          case LeafPi1::unknown:
            // Open case: list both conditional branches instead of deciding.
            if (s.c2_smooth)
              v.claims.push_back(claim(
                  "reeb-exclusion-conditional",
                  "if the leaf's fundamental group is finite the scenario is "
                  "ruled out",
                  kAnchorReebExclusion));
            v.claims.push_back(claim(
                "small-compact-leaf-conditional",
                "if the leaf's fundamental group is infinite the leaf must be "
                "cosmologically small",
                kAnchorSmallLeaf));
            v.summary_class = SummaryClass::undetermined;
            return v;
        }
        throw std::logic_error("scenario: unhandled leaf_pi1 value");
      }
      v.claims.push_back(claim("intersecting-leaf-torus",
                               "a compact leaf meeting the strings is a genus-1 "
                               "surface",
                               kAnchorAllTori));
      v.claims.push_back(claim("reeb-component",
                               "a Reeb component sits along each such "
                               "intersection",
                               kAnchorReebComponent));
      v.claims.push_back(claim("toroidal-surgery",
                               "toroidal surgery elements are possible in the "
                               "ambient slice",
                               kAnchorReebComponent));
      v.summary_class = SummaryClass::toroidal;
      return v;
    }

    case CompactLeaves::all: {
      if (!strings_ok) return hypotheses_not_met();
      v.claims.push_back(claim("all-leaves-tori",
                               "every leaf is a genus-1 torus",
                               kAnchorAllTori));
      v.claims.push_back(claim("stable-global",
                               "the toroidal condition is stable and holds "
                               "globally across the foliation",
                               kAnchorAllTori));
      v.summary_class = SummaryClass::toroidal;
      return v;
    }
  }
  throw std::logic_error("scenario: unhandled compact_leaves value");
}

const std::vector<std::string>& scenario_keys() {
  static const std::vector<std::string> keys = {
      "no-compact",
      "one-nonintersecting-finite",
      "one-nonintersecting-infinite",
      "one-intersecting",
      "all-compact",
  };
  return keys;
}

FoliationScenario scenario_from_key(const std::string& key) {
  if (key == "no-compact") return make_scenario(CompactLeaves::none);
  if (key == "one-nonintersecting-finite")
    return make_scenario(CompactLeaves::at_least_one, false, LeafPi1::finite);
  if (key == "one-nonintersecting-infinite")
    return make_scenario(CompactLeaves::at_least_one, false, LeafPi1::infinite);
  if (key == "one-intersecting")
    return make_scenario(CompactLeaves::at_least_one, true, LeafPi1::unknown);
  if (key == "all-compact") return make_scenario(CompactLeaves::all);
  throw std::invalid_argument("unknown scenario key '" + key + "'");
}

std::string scenario_key(const FoliationScenario& s) {
  validate_scenario(s);
  switch (s.compact_leaves) {
    case CompactLeaves::none:
      return "no-compact";
    case CompactLeaves::all:
      return "all-compact";
    case CompactLeaves::at_least_one:
      if (*s.intersects_strings) return "one-intersecting";
      switch (s.leaf_pi1) {
        case LeafPi1::finite:
          return "one-nonintersecting-finite";
        case LeafPi1::infinite:
          return "one-nonintersecting-infinite";
        case LeafPi1::unknown:
          return "one-nonintersecting-unknown";
      }
  }
  throw std::logic_error("scenario: unhandled key mapping");
}

std::vector<std::pair<FoliationScenario, TopologyVerdict>> enumerate_scenarios() {
  std::vector<std::pair<FoliationScenario, TopologyVerdict>> out;
  out.reserve(scenario_keys().size());
  for (const auto& key : scenario_keys()) {
    FoliationScenario s = scenario_from_key(key);
    out.emplace_back(s, classify(s));
  }
  return out;
}

std::string summary_class_name(SummaryClass c) {
  switch (c) {
    case SummaryClass::not_simply_connected:
      return "not-simply-connected";
    case SummaryClass::toroidal:
      return "toroidal";
    case SummaryClass::small_compact_leaf:
      return "small-compact-leaf";
    case SummaryClass::excluded:
      return "excluded";
    case SummaryClass::undetermined:
      return "undetermined";
  }
  throw std::logic_error("unhandled summary class");
}

const std::vector<std::string>& fixed_anchor_set() {
  static const std::vector<std::string> anchors = {
      kAnchorPi1Infinite,    kAnchorNotSimplyConnected, kAnchorReebExclusion,
      kAnchorSmallLeaf,      kAnchorReebComponent,      kAnchorAllTori,
      kAnchorThreeWay,
  };
  return anchors;
}

bool anchor_is_string_dependent(const std::string& anchor) {
  return anchor == kAnchorReebExclusion || anchor == kAnchorSmallLeaf ||
         anchor == kAnchorReebComponent || anchor == kAnchorAllTori;
}

}  // namespace conefold
