// froblab: law checks, invariance experiments, scenarios and fuzzing.
//
// Reports go to stdout as JSON, a short summary to stderr.
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.

#include <froblab/froblab.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace froblab;

namespace {

struct Options {
  std::string backend = "rational";
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
  std::size_t max_dim = 4;
  std::size_t max_slices = 6;
  std::size_t trials = 200;
  std::optional<std::size_t> disconnected;
  bool json_only = false;

  std::string diagram_path;
  std::string labelling_path;
  std::string functor = "complex";
  std::string structure_path;
  std::vector<std::string> scenarios;
  bool float_backend() const { return backend == "float64"; }
};

struct Outcome {
  Json report;
  bool passed = false;
  std::string summary;
};

Json command_echo(std::string const& name, Options const& o) {
  Json j = {{"command", name}, {"backend", o.backend}};
  if (o.float_backend()) j["tolerance"] = o.tolerance;
  return j;
}

/// A builtin functor name or a JSON file holding a functor spec.
FunctorSpec load_functor_spec(std::string const& text) {
  static std::vector<std::string> const builtin{"identity", "strong-permutation", "strong-twisted",
                                                "complex", "dual-numbers", "matrix"};
  if (std::find(builtin.begin(), builtin.end(), text) != builtin.end()) {
    Json const j = text;
    return read_functor_spec(JNode(j));
  }
  auto const doc = JsonDocument::load(text);
  return doc.read([](Json const& root) { return read_functor_spec(JNode(root)); });
}

Outcome analyze(Options const& o) {
  auto const doc = JsonDocument::load(o.diagram_path);
  auto const file = doc.read([](Json const& root) { return read_diagram_file(JNode(root)); });
  auto const t = topology(file.diagram);
  Json r = command_echo("analyze", o);
  r["file"] = o.diagram_path;
  r["nodes"] = file.diagram.node_count();
  r["topology"] = write_topology(t);
  return {r, true, o.diagram_path + ": " + to_string(t.predicted_class)};
}

bool guaranteed(InvarianceClass c, bool separable) {
  return c == InvarianceClass::FrobeniusInvariant || (separable && c == InvarianceClass::SeparableOnly);
}

template <Scalar S>
Outcome invariance(Options const& o) {
  auto const doc = JsonDocument::load(o.diagram_path);
  auto const file = doc.read([](Json const& root) { return read_diagram_file(JNode(root)); });
  Labelling v;
  if (o.labelling_path.empty()) {
    v = doc.read([&](Json const& root) { return read_labelling(JNode(root)["labelling"], file.scheme); });
  } else {
    auto const ldoc = JsonDocument::load(o.labelling_path);
    v = ldoc.read([&](Json const& root) { return read_labelling(JNode(root), file.scheme); });
  }
  auto const F = make_functor<S>(load_functor_spec(o.functor), o.tolerance);

  std::vector<MatObject> samples{MatObject()};
  for (auto const& [label, a] : v.objects) samples.push_back(a);
  auto const laws = check_frobenius_functor(F, samples, o.tolerance);
  bool const separable = laws.passed("separability");
  bool const frobenius = laws.without("separability").all_passed();

  auto const t = topology(file.diagram);
  auto const result = verify_invariance(F, file.diagram, convert_labelling<S>(v), o.tolerance);
  bool const expected = frobenius && guaranteed(t.predicted_class, separable);

  Json r = command_echo("invariance", o);
  r["file"] = o.diagram_path;
  r["functor"] = F.name;
  r["functor_laws"] = write_law_report(laws);
  r["frobenius"] = frobenius;
  r["separable"] = separable;
  r["topology"] = write_topology(t);
  r["invariance_guaranteed"] = expected;
  r["equal"] = result.equal;
  r["consistent"] = !expected || result.equal;
  r["lhs"] = write_morphism(result.lhs);
  r["rhs"] = write_morphism(result.rhs);
  std::string summary = o.diagram_path + " under " + F.name + ": " + (result.equal ? "equal" : "unequal") +
                        " (predicted " + to_string(t.predicted_class) + ")";
  if (expected && !result.equal) summary += " INCONSISTENT with the prediction";
  return {r, result.equal, summary};
}

Outcome scenario(Options const& o) {
  if (o.float_backend()) throw InputError("scenarios run in rational mode only");
  auto names = o.scenarios;
  if (names.empty()) names = scenario_names();
  Json list = Json::array();
  bool all = true;
  std::string summary;
  for (auto const& name : names) {
    auto const known = scenario_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      std::string msg = "unknown scenario '" + name + "'; known:";
      for (auto const& k : known) msg += " " + k;
      throw InputError(msg);
    }
    auto const s = run_scenario(name, o.seed);
    Json checks = Json::array();
    for (auto const& c : s.checks)
      checks.push_back({{"name", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"ok", c.ok()}});
    list.push_back({{"name", s.name},
                    {"claim", s.claim},
                    {"expectation", s.expectation == Expectation::Holds ? "holds" : "fails"},
                    {"outcome", s.outcome()},
                    {"checks", std::move(checks)}});
    all = all && s.passed();
    summary += (summary.empty() ? "" : "\n") + s.name + ": " + s.outcome();
  }
  Json r = command_echo("scenario", o);
  r["seed"] = o.seed;
  r["passed"] = all;
  r["scenarios"] = std::move(list);
  return {r, all, summary};
}

Outcome fuzz(Options const& o) {
  FuzzConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.disconnected = o.disconnected.value_or(o.trials / 4);
  cfg.max_dim = o.max_dim;
  cfg.max_slices = o.max_slices;
  cfg.float_backend = o.float_backend();
  cfg.tolerance = o.tolerance;
  auto const start = std::chrono::steady_clock::now();
  auto const report = run_fuzz(cfg);
  std::chrono::duration<double> const elapsed = std::chrono::steady_clock::now() - start;
  char took[32];
  std::snprintf(took, sizeof took, " in %.2fs", elapsed.count());
  auto line = [](char const* name, FuzzTotals const& t) {
    return std::string(name) + " " + std::to_string(t.passed) + "/" + std::to_string(t.trials);
  };
  return {write_fuzz_report(report), report.passed(),
          line("connected", report.connected) + ", " + line("acyclic", report.acyclic) + ", " +
              line("disconnected refuted", report.disconnected) + took};
}

template <Scalar S>
Outcome laws(Options const& o) {
  auto const doc = JsonDocument::load(o.structure_path);
  auto const spec = doc.read([](Json const& root) { return read_structure(JNode(root)); });
  auto const result = check_structure<S>(spec, o.tolerance);
  Json r = command_echo("laws", o);
  r["file"] = o.structure_path;
  r["kind"] = result.kind;
  r["subject"] = result.subject;
  r["report"] = write_law_report(result.report);
  std::string summary = result.kind + " " + result.subject + ": " + (result.report.all_passed() ? "pass" : "FAIL");
  for (auto const& f : result.report.failures()) summary += "\n  failed: " + f;
  return {r, result.report.all_passed(), summary};
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Frobenius monoidal functor laboratory"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--backend", o.backend, "rational or float64")->check(CLI::IsMember({"rational", "float64"}));
  app.add_option("--tolerance", o.tolerance, "comparison tolerance in float64 mode")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", o.seed, "random seed (FROBLAB_SEED overrides)");
  app.add_option("--max-dim", o.max_dim, "largest random object dimension")->check(CLI::PositiveNumber);
  app.add_option("--max-slices", o.max_slices, "largest random diagram height")->check(CLI::PositiveNumber);
  app.add_option("--trials", o.trials, "fuzz trials per connected family");
  app.add_option("--disconnected", o.disconnected, "disconnected fuzz trials (default trials/4)");
  app.add_flag("--json-only", o.json_only, "no summary on stderr");

  auto* an = app.add_subcommand("analyze", "topology and predicted invariance class of a diagram");
  an->add_option("diagram", o.diagram_path, "diagram file")->required();

  auto* inv = app.add_subcommand("invariance", "compare v^F(G) with v(G)^F");
  inv->add_option("diagram", o.diagram_path, "diagram file")->required();
  inv->add_option("labelling", o.labelling_path, "labelling file (default: the diagram file's \"labelling\")");
  inv->add_option("--functor", o.functor,
                  "identity, strong-permutation, strong-twisted, complex, dual-numbers, matrix, or a JSON file");

  auto* sc = app.add_subcommand("scenario", "run named scenarios (all when none given)");
  sc->add_option("--scenario,names", o.scenarios, "scenario name");

  app.add_subcommand("fuzz", "random diagrams against the invariance theorems");

  auto* lw = app.add_subcommand("laws", "check the laws of a structure file");
  lw->add_option("structure", o.structure_path, "structure file")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (char const* env = std::getenv("FROBLAB_SEED")) {
    try {
      std::size_t used = 0;
      o.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (std::exception const&) {
      std::cerr << "froblab: FROBLAB_SEED must be an unsigned integer\n";
      return 2;
    }
  }

  try {
    Outcome out;
    bool const f = o.float_backend();
    if (an->parsed()) out = analyze(o);
    else if (inv->parsed()) out = f ? invariance<double>(o) : invariance<Rational>(o);
    else if (sc->parsed()) out = scenario(o);
    else if (lw->parsed()) out = f ? laws<double>(o) : laws<Rational>(o);
    else out = fuzz(o);
    std::cout << out.report.dump(2) << "\n";
    if (!o.json_only) std::cerr << out.summary << "\n";
    return out.passed ? 0 : 1;
  } catch (LawError const& e) {
    std::cerr << "froblab: " << e.what();
    for (auto const& f : e.failed()) std::cerr << (&f == &e.failed().front() ? ": " : ", ") << f;
    std::cerr << "\n";
    return 1;
  } catch (Error const& e) {
    std::cerr << "froblab: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "froblab: internal error: " << e.what() << "\n";
    return 2;
  }
}
