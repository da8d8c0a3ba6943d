#pragma once

#include <froblab/functor.hpp>
#include <froblab/io.hpp>
#include <froblab/random.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace froblab {

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 200;        // connected, and again acyclic
  std::size_t disconnected = 50;
  std::size_t max_dim = 4;
  std::size_t max_slices = 6;
  std::size_t relabellings = 3;    // extra nonzero labellings tried per disconnected diagram
  bool float_backend = false;
  double tolerance = 1e-9;
};

struct FuzzCheck {
  std::string functor;
  std::size_t labelling = 0;  // 0 = the generated one
  bool equal = false;
};

struct FuzzTrial {
  std::string family;
  std::size_t index = 0;
  std::size_t nodes = 0;
  TopologyReport topology;
  bool topology_ok = false;
  std::vector<FuzzCheck> checks;
  bool passed = false;
};

struct FuzzTotals {
  std::size_t trials = 0;
  std::size_t passed = 0;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<FuzzTrial> trials;
  FuzzTotals connected, acyclic, disconnected;

  bool passed() const {
    return connected.passed == connected.trials && acyclic.passed == acyclic.trials &&
           disconnected.passed == disconnected.trials;
  }
};

namespace detail {

template <Scalar S>
struct FuzzFunctors {
  std::vector<BasicFrobeniusFunctor<S>> separable;
  BasicFrobeniusFunctor<S> frobenius;
};

template <Scalar S>
FuzzFunctors<S> fuzz_functors(double tolerance) {
  auto make = [&](FrobeniusAlgebraData const& a) {
    return algebra_induced_functor(convert_algebra<S>(a), tolerance);
  };
  return {{make(complex_over_rationals(2, 0)), make(matrix_algebra_frobenius(2))}, make(dual_numbers())};
}

template <Scalar S>
FuzzCheck fuzz_check(BasicFrobeniusFunctor<S> const& F, RandomDiagram const& r, Labelling const& v,
                     std::size_t labelling, double tolerance) {
  return {F.name, labelling, verify_invariance(F, r.diagram, convert_labelling<S>(v), tolerance).equal};
}

inline FuzzTotals& totals_for(FuzzReport& report, std::string const& family) {
  if (family == "connected") return report.connected;
  if (family == "acyclic") return report.acyclic;
  return report.disconnected;
}

}  // namespace detail

/// Three families, each trial seeded by (seed, family stream, index):
/// connected diagrams under the separable functors, connected acyclic ones
/// under the dual-numbers functor, and disconnected ones that some functor
/// and labelling must refute.
template <Scalar S>
FuzzReport run_fuzz(FuzzConfig const& cfg) {
  DiagramGenConfig gen;
  gen.max_dim = cfg.max_dim;
  gen.max_slices = cfg.max_slices;
  auto const functors = detail::fuzz_functors<S>(cfg.tolerance);
  FuzzReport report{cfg, {}, {}, {}, {}};

  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = trial_rng(cfg.seed, 0, i);
    auto const r = random_connected_diagram(rng, gen, false);
    FuzzTrial t{"connected", i, r.diagram.node_count(), topology(r.diagram), false, {}, false};
    t.topology_ok = t.topology.components == 1 && t.topology.predicted_class != InvarianceClass::NotGuaranteed;
    for (auto const& F : functors.separable) t.checks.push_back(detail::fuzz_check(F, r, r.labelling, 0, cfg.tolerance));
    report.trials.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < cfg.trials; ++i) {
    Rng rng = trial_rng(cfg.seed, 1, i);
    auto const r = random_connected_diagram(rng, gen, true);
    FuzzTrial t{"acyclic", i, r.diagram.node_count(), topology(r.diagram), false, {}, false};
    t.topology_ok = t.topology.components == 1 && t.topology.betti1 == 0 &&
                    t.topology.predicted_class == InvarianceClass::FrobeniusInvariant;
    t.checks.push_back(detail::fuzz_check(functors.frobenius, r, r.labelling, 0, cfg.tolerance));
    report.trials.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < cfg.disconnected; ++i) {
    Rng rng = trial_rng(cfg.seed, 2, i);
    auto const r = random_disconnected_diagram(rng, gen);
    FuzzTrial t{"disconnected", i, r.diagram.node_count(), topology(r.diagram), false, {}, false};
    t.topology_ok = t.topology.components >= 2 && t.topology.predicted_class == InvarianceClass::NotGuaranteed;
    bool refuted = false;
    for (std::size_t k = 0; k <= cfg.relabellings && !refuted; ++k) {
      Labelling const v = k == 0 ? r.labelling : random_relabelling(rng, r, true);
      std::vector<BasicFrobeniusFunctor<S> const*> all;
      for (auto const& F : functors.separable) all.push_back(&F);
      all.push_back(&functors.frobenius);
      for (auto const* F : all) {
        t.checks.push_back(detail::fuzz_check(*F, r, v, k, cfg.tolerance));
        if (!t.checks.back().equal) {
          refuted = true;
          break;
        }
      }
    }
    report.trials.push_back(std::move(t));
  }

  for (auto& t : report.trials) {
    bool const disconnected = t.family == "disconnected";
    bool any_unequal = false, all_equal = true;
    for (auto const& c : t.checks) {
      any_unequal = any_unequal || !c.equal;
      all_equal = all_equal && c.equal;
    }
    t.passed = t.topology_ok && (disconnected ? any_unequal : all_equal);
    auto& totals = detail::totals_for(report, t.family);
    ++totals.trials;
    if (t.passed) ++totals.passed;
  }
  return report;
}

inline FuzzReport run_fuzz(FuzzConfig const& cfg) {
  return cfg.float_backend ? run_fuzz<double>(cfg) : run_fuzz<Rational>(cfg);
}

inline Json write_fuzz_report(FuzzReport const& r) {
  auto const& c = r.config;
  Json config = {{"seed", c.seed},
                 {"trials", c.trials},
                 {"disconnected", c.disconnected},
                 {"max_dim", c.max_dim},
                 {"max_slices", c.max_slices},
                 {"relabellings", c.relabellings},
                 {"backend", c.float_backend ? "float64" : "rational"}};
  if (c.float_backend) config["tolerance"] = c.tolerance;
  Json trials = Json::array();
  for (auto const& t : r.trials) {
    Json checks = Json::array();
    for (auto const& k : t.checks) checks.push_back({{"functor", k.functor}, {"labelling", k.labelling}, {"equal", k.equal}});
    trials.push_back({{"family", t.family},
                      {"trial", t.index},
                      {"nodes", t.nodes},
                      {"topology", write_topology(t.topology)},
                      {"topology_ok", t.topology_ok},
                      {"checks", std::move(checks)},
                      {"passed", t.passed}});
  }
  auto totals = [](FuzzTotals const& t) { return Json{{"trials", t.trials}, {"passed", t.passed}}; };
  return {{"command", "fuzz"},
          {"config", std::move(config)},
          {"passed", r.passed()},
          {"totals", {{"connected", totals(r.connected)}, {"acyclic", totals(r.acyclic)}, {"disconnected", totals(r.disconnected)}}},
          {"trials", std::move(trials)}};
}

}  // namespace froblab
