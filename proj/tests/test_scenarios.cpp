#include <froblab/froblab.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace froblab;

TEST_CASE("every registered scenario meets its expectation", "[scenario]") {
  auto const names = scenario_names();
  REQUIRE(names.size() == 13);
  for (auto const& name : names) {
    auto const r = run_scenario(name, 3);
    INFO(name);
    for (auto const& c : r.checks) {
      INFO(c.name);
      CHECK(c.ok());
    }
    CHECK(r.outcome() != "FAIL");
  }
}

TEST_CASE("negative scenarios report confirmed expected failures", "[scenario]") {
  for (char const* name : {"yb-not-preserved", "distlaw-not-preserved", "bimonoid-not-preserved", "barbell-counterexample"})
    CHECK(run_scenario(name).outcome() == "expected-failure confirmed");
  CHECK(run_scenario("prebimonoidal-compose").outcome() == "pass");
  CHECK_THROWS_AS(run_scenario("no-such-scenario"), Error);
}

TEST_CASE("scenario outcome depends only on the checks", "[scenario]") {
  ScenarioResult r{"x", "claim", Expectation::Holds, {{"a", true, true}}};
  CHECK(r.outcome() == "pass");
  r.checks.push_back({"b", false, true});
  CHECK(r.outcome() == "FAIL");
  ScenarioResult empty{"y", "claim", Expectation::Fails, {}};
  CHECK(empty.outcome() == "FAIL");
}

TEST_CASE("random diagrams land in their topology class", "[fuzz]") {
  DiagramGenConfig cfg;
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng a = trial_rng(9, 0, i);
    auto const c = random_connected_diagram(a, cfg, false);
    CHECK(topology(c.diagram).components == 1);
    CHECK(c.diagram.slices().size() <= cfg.max_slices);
    Rng b = trial_rng(9, 1, i);
    auto const t = topology(random_connected_diagram(b, cfg, true).diagram);
    CHECK(t.components == 1);
    CHECK(t.betti1 == 0);
    Rng d = trial_rng(9, 2, i);
    CHECK(topology(random_disconnected_diagram(d, cfg).diagram).components >= 2);
  }
}

TEST_CASE("small fuzz runs pass and are reproducible", "[fuzz]") {
  FuzzConfig cfg;
  cfg.seed = 17;
  cfg.trials = 25;
  cfg.disconnected = 10;
  auto const a = run_fuzz(cfg);
  CHECK(a.passed());
  CHECK(a.connected.trials == 25);
  CHECK(a.disconnected.passed == 10);
  CHECK(write_fuzz_report(a).dump() == write_fuzz_report(run_fuzz(cfg)).dump());
  cfg.seed = 18;
  CHECK(write_fuzz_report(a).dump() != write_fuzz_report(run_fuzz(cfg)).dump());

  cfg.float_backend = true;
  CHECK(run_fuzz(cfg).passed());
}
