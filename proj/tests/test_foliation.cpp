#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "conefold/foliation.hpp"

using namespace conefold;

namespace {

bool has_claim(const TopologyVerdict& v, const std::string& id) {
  return std::any_of(v.claims.begin(), v.claims.end(),
                     [&](const TopologyClaim& c) { return c.statement_id == id; });
}

const TopologyClaim& claim_by_id(const TopologyVerdict& v, const std::string& id) {
  for (const auto& c : v.claims)
    if (c.statement_id == id) return c;
  throw std::logic_error("missing claim " + id);
}

}  // namespace

TEST_CASE("theorem gates are plain truth tables") {
  CHECK(theorem_compact_leaf_exists(true, true));
  CHECK(!theorem_compact_leaf_exists(true, false));
  CHECK(!theorem_compact_leaf_exists(false, true));
  CHECK(!theorem_compact_leaf_exists(false, false));

  CHECK(reeb_stability_propagates(true));
  CHECK(!reeb_stability_propagates(false));
}

TEST_CASE("scenario construction enforces the intersection field") {
  CHECK_THROWS_AS(make_scenario(CompactLeaves::at_least_one), std::invalid_argument);
  CHECK_NOTHROW(make_scenario(CompactLeaves::at_least_one, true));
  CHECK_NOTHROW(make_scenario(CompactLeaves::at_least_one, false));
  CHECK_THROWS_AS(make_scenario(CompactLeaves::none, true), std::invalid_argument);
  CHECK_THROWS_AS(make_scenario(CompactLeaves::all, false), std::invalid_argument);
  CHECK_NOTHROW(make_scenario(CompactLeaves::none));
  CHECK_NOTHROW(make_scenario(CompactLeaves::all));
}

TEST_CASE("no compact leaf forces infinite fundamental group") {
  auto v = classify(make_scenario(CompactLeaves::none));
  CHECK(!v.excluded);
  CHECK(v.summary_class == SummaryClass::not_simply_connected);
  REQUIRE(v.claims.size() == 2);
  CHECK(has_claim(v, "pi1-infinite"));
  CHECK(has_claim(v, "not-simply-connected"));
  CHECK(claim_by_id(v, "pi1-infinite").paper_anchor ==
        "$\\pi_1(\\Sigma)$ is infinite");
  CHECK(claim_by_id(v, "not-simply-connected").paper_anchor ==
        "$\\Sigma$ is not simply-connected");
}

TEST_CASE("nonintersecting finite-pi1 leaf is excluded by Reeb stability") {
  auto v = classify(
      make_scenario(CompactLeaves::at_least_one, false, LeafPi1::finite));
  CHECK(v.excluded);
  CHECK(v.summary_class == SummaryClass::excluded);
  REQUIRE(v.claims.size() == 1);
  CHECK(v.claims[0].statement_id == "reeb-exclusion");
  CHECK(v.claims[0].paper_anchor == "Reeb stability removes the possibility");
}

TEST_CASE("nonintersecting infinite-pi1 leaf must be small") {
  auto v = classify(
      make_scenario(CompactLeaves::at_least_one, false, LeafPi1::infinite));
  CHECK(!v.excluded);
  CHECK(v.summary_class == SummaryClass::small_compact_leaf);
  REQUIRE(v.claims.size() == 1);
  CHECK(v.claims[0].statement_id == "small-compact-leaf");
  CHECK(v.claims[0].paper_anchor == "would have to be small (cosmologically)");
}

TEST_CASE("unknown pi1 yields the conditional disjunction") {
  auto v = classify(
      make_scenario(CompactLeaves::at_least_one, false, LeafPi1::unknown));
  CHECK(!v.excluded);
  CHECK(v.summary_class == SummaryClass::undetermined);
  REQUIRE(v.claims.size() == 2);
  CHECK(has_claim(v, "reeb-exclusion-conditional"));
  CHECK(has_claim(v, "small-compact-leaf-conditional"));

  // without C2 smoothness the Reeb branch of the disjunction drops out
  auto rough = classify(make_scenario(CompactLeaves::at_least_one, false,
                                      LeafPi1::unknown, true, true, false));
  CHECK(rough.claims.size() == 1);
  CHECK(has_claim(rough, "small-compact-leaf-conditional"));
}

TEST_CASE("intersecting leaf gives the toroidal picture") {
  auto v = classify(make_scenario(CompactLeaves::at_least_one, true));
  CHECK(!v.excluded);
  CHECK(v.summary_class == SummaryClass::toroidal);
  REQUIRE(v.claims.size() == 3);
  CHECK(has_claim(v, "intersecting-leaf-torus"));
  CHECK(has_claim(v, "reeb-component"));
  CHECK(has_claim(v, "toroidal-surgery"));
  CHECK(claim_by_id(v, "intersecting-leaf-torus").paper_anchor ==
        "the surfaces transverse to these strings are tori");
}

TEST_CASE("all leaves compact gives the toroidal picture globally") {
  auto v = classify(make_scenario(CompactLeaves::all));
  CHECK(!v.excluded);
  CHECK(v.summary_class == SummaryClass::toroidal);
  REQUIRE(v.claims.size() == 2);
  CHECK(has_claim(v, "all-leaves-tori"));
  CHECK(has_claim(v, "stable-global"));
  CHECK(claim_by_id(v, "all-leaves-tori").paper_anchor ==
        "the surfaces transverse to these strings are tori");
}

TEST_CASE("string and observational hypotheses gate the compact-leaf rows") {
  for (auto leaves : {CompactLeaves::at_least_one, CompactLeaves::all}) {
    std::optional<bool> intersects;
    if (leaves == CompactLeaves::at_least_one) intersects = true;
    for (int mask = 0; mask < 4; ++mask) {
      bool strings = (mask & 1) == 0;
      bool obs = (mask & 2) == 0;
      if (strings && obs) continue;
      auto v = classify(make_scenario(leaves, intersects, LeafPi1::unknown,
                                      strings, obs, true));
      CHECK(v.summary_class == SummaryClass::undetermined);
      CHECK(!v.excluded);
      REQUIRE(v.claims.size() == 1);
      CHECK(v.claims[0].statement_id == "hypotheses-not-met");
    }
  }

  // the no-compact row is a foliation statement, not a string statement
  auto no_strings = classify(
      make_scenario(CompactLeaves::none, {}, LeafPi1::unknown, false, false, true));
  CHECK(no_strings.summary_class == SummaryClass::not_simply_connected);

  // but it does require C2 smoothness
  auto rough = classify(
      make_scenario(CompactLeaves::none, {}, LeafPi1::unknown, true, true, false));
  CHECK(rough.summary_class == SummaryClass::undetermined);
  CHECK(rough.claims.size() == 1);
  CHECK(rough.claims[0].statement_id == "hypotheses-not-met");
}

TEST_CASE("gating soundness: string anchors never appear without the hypotheses") {
  for (const auto& key : scenario_keys()) {
    for (int mask = 0; mask < 4; ++mask) {
      auto s = scenario_from_key(key);
      s.strings_exist = (mask & 1) != 0;
      s.observational_constraints_hold = (mask & 2) != 0;
      auto v = classify(s);
      CHECK(!v.claims.empty());
      if (s.strings_exist && s.observational_constraints_hold) continue;
      for (const auto& c : v.claims)
        CHECK(!anchor_is_string_dependent(c.paper_anchor));
    }
  }
}

TEST_CASE("enumeration walks the five scenarios in key order") {
  auto table = enumerate_scenarios();
  auto keys = scenario_keys();
  REQUIRE(table.size() == 5);
  REQUIRE(keys.size() == 5);
  CHECK(keys[0] == "no-compact");
  CHECK(keys[1] == "one-nonintersecting-finite");
  CHECK(keys[2] == "one-nonintersecting-infinite");
  CHECK(keys[3] == "one-intersecting");
  CHECK(keys[4] == "all-compact");

  std::set<SummaryClass> classes;
  for (size_t i = 0; i < table.size(); ++i) {
    CHECK(scenario_key(table[i].first) == keys[i]);
    auto direct = classify(table[i].first);
    CHECK(direct.summary_class == table[i].second.summary_class);
    REQUIRE(direct.claims.size() == table[i].second.claims.size());
    for (size_t j = 0; j < direct.claims.size(); ++j)
      CHECK(direct.claims[j].statement_id ==
            table[i].second.claims[j].statement_id);
    const bool substantiated =
        table[i].second.excluded || !table[i].second.claims.empty();
    CHECK(substantiated);
    classes.insert(table[i].second.summary_class);
    for (const auto& c : table[i].second.claims) {
      const auto& anchors = fixed_anchor_set();
      CHECK(std::find(anchors.begin(), anchors.end(), c.paper_anchor) !=
            anchors.end());
    }
  }
  CHECK(classes.size() == 4);
  CHECK(classes.count(SummaryClass::undetermined) == 0);
}

TEST_CASE("scenario keys round-trip") {
  for (const auto& key : scenario_keys())
    CHECK(scenario_key(scenario_from_key(key)) == key);
  CHECK_THROWS_AS(scenario_from_key("reeb-only"), std::invalid_argument);

  CHECK(summary_class_name(SummaryClass::not_simply_connected) ==
        "not-simply-connected");
  CHECK(summary_class_name(SummaryClass::toroidal) == "toroidal");
  CHECK(summary_class_name(SummaryClass::small_compact_leaf) ==
        "small-compact-leaf");
  CHECK(summary_class_name(SummaryClass::excluded) == "excluded");
  CHECK(summary_class_name(SummaryClass::undetermined) == "undetermined");
}

TEST_CASE("the anchor set is frozen byte for byte") {
  const auto& anchors = fixed_anchor_set();
  auto contains = [&](const char* text) {
    return std::find(anchors.begin(), anchors.end(), std::string(text)) !=
           anchors.end();
  };
  CHECK(contains("$\\pi_1(\\Sigma)$ is infinite"));
  CHECK(contains("$\\Sigma$ is not simply-connected"));
  CHECK(contains("Reeb stability removes the possibility"));
  CHECK(contains("would have to be small (cosmologically)"));
  CHECK(contains("foliated internally by planes"));
  CHECK(contains("the surfaces transverse to these strings are tori"));
  CHECK(contains("three possibilities for its topology"));

  CHECK(anchor_is_string_dependent("Reeb stability removes the possibility"));
  CHECK(!anchor_is_string_dependent("$\\pi_1(\\Sigma)$ is infinite"));
}
