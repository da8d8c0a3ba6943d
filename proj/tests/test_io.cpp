#include <froblab/froblab.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace froblab;
using Catch::Matchers::ContainsSubstring;

namespace {

std::string const barbell_text = R"({
  "scheme": {
    "vertices": ["A"],
    "edges": [
      {"name": "eta", "source": [], "target": ["A"]},
      {"name": "epsilon", "source": ["A"], "target": []}
    ]
  },
  "diagram": {
    "input": [],
    "output": [],
    "slices": [[{"gen": "eta"}], [{"gen": "epsilon"}]]
  },
  "labelling": {
    "objects": {"A": 2},
    "nodes": {"eta": [["1"], ["0"]], "epsilon": [["2", "0"]]}
  }
})";

template <class F>
std::string input_error(std::string const& text, F&& read) {
  try {
    JsonDocument::parse(text, "t.json").read(read);
  } catch (InputError const& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("diagram files round-trip", "[io]") {
  auto const doc = JsonDocument::parse(barbell_text, "barbell.json");
  auto const file = doc.read([](Json const& j) { return read_diagram_file(JNode(j)); });
  CHECK(file.diagram.node_count() == 2);
  CHECK(file.diagram == catalog::barbell());
  auto const again = JsonDocument::parse(write_diagram_file(file.scheme, file.diagram).dump(), "again");
  CHECK(again.read([](Json const& j) { return read_diagram_file(JNode(j)); }).diagram == file.diagram);

  auto const v = doc.read([&](Json const& j) { return read_labelling(JNode(j)["labelling"], file.scheme); });
  CHECK(evaluate(file.diagram, v).matrix() == Matrix::from_rows({{2}}));
}

TEST_CASE("syntax errors carry line and column", "[io]") {
  try {
    JsonDocument::parse("{\n  \"a\": [1,\n  2,,\n]}", "bad.json");
    FAIL("no error");
  } catch (InputError const& e) {
    CHECK_THAT(e.what(), ContainsSubstring("bad.json:3:"));
  }
}

TEST_CASE("reader errors point at the offending value", "[io]") {
  std::string text = barbell_text;
  text.replace(text.find("\"gen\": \"epsilon\""), 16, "\"gen\": \"nope\"");
  auto const msg = input_error(text, [](Json const& j) { return read_diagram_file(JNode(j)); });
  CHECK_THAT(msg, ContainsSubstring("t.json:12:43"));
  CHECK_THAT(msg, ContainsSubstring("unknown generator 'nope'"));
  CHECK_THAT(msg, ContainsSubstring("/diagram/slices/1/0/gen"));

  auto const shape = input_error(R"({"objects": {"A": 2}, "nodes": {"eta": [["1"]], "epsilon": [["1", "0"]]}})",
                                 [](Json const& j) {
                                   TensorScheme const s = catalog::frobenius_scheme();
                                   TensorScheme t{{"A"}, {*s.find("eta"), *s.find("epsilon")}};
                                   return read_labelling(JNode(j), t);
                                 });
  CHECK_THAT(shape, ContainsSubstring("t.json:1:"));

  auto const floaty = input_error(R"({"x": 0.5})", [](Json const& j) { return JNode(j)["x"].rational(); });
  CHECK_THAT(floaty, ContainsSubstring("as strings"));
}

TEST_CASE("object words parse", "[io]") {
  CHECK(parse_object("I").is_unit());
  auto const w = parse_object("A[2]*C[3]");
  CHECK(w.dimension() == 6);
  CHECK(w.size() == 2);
  CHECK_THROWS_AS(parse_object("A[x]"), ParseError);
  CHECK_THROWS_AS(parse_object("A"), ParseError);
}

TEST_CASE("algebra and functor specs", "[io]") {
  Json const j = Json::parse(R"({"kind": "algebra", "algebra": {"builtin": "complex", "a": "2", "b": 0}})");
  auto const spec = read_functor_spec(JNode(j));
  CHECK(spec.kind == FunctorKind::AlgebraInduced);
  CHECK(make_functor<Rational>(spec).name == algebra_induced_functor(complex_over_rationals(2, 0)).name);

  Json const inline_alg = Json::parse(R"({"name": "dual", "dim": 2,
      "mu": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]], "form": [0, 1]})");
  auto const alg = read_algebra(JNode(inline_alg));
  CHECK(alg.delta.matrix() == dual_numbers().delta.matrix());
}

TEST_CASE("structure files dispatch to the checkers", "[io][laws]") {
  auto run = [](char const* text) {
    Json const j = Json::parse(text);
    return check_structure<Rational>(read_structure(JNode(j))).report;
  };
  CHECK(run(R"({"kind": "yb", "carrier": "A[2]", "y": {"builtin": "swap"}})").all_passed());
  CHECK_FALSE(run(R"({"kind": "algebra", "algebra": "dual-numbers", "require_separable": true})").all_passed());
  CHECK(run(R"({"kind": "algebra", "algebra": "complex"})").all_passed());
  CHECK(run(R"({"kind": "weak-yb", "carrier": "A[2]", "y": {"builtin": "q-r-matrix", "q": "2"},
               "conjugate_by": "complex"})")
            .all_passed());
  CHECK(run(R"({"kind": "bimonoid", "group": 2, "weak": true, "conjugate_by": "complex"})").all_passed());
  CHECK_FALSE(run(R"({"kind": "bimonoid", "group": 2, "conjugate_by": "complex"})").all_passed());
  CHECK(run(R"({"kind": "functor", "functor": "matrix", "samples": ["I", "A[2]"]})").all_passed());

  Json const bad = Json::parse(R"({"kind": "mystery"})");
  CHECK_THROWS_AS(JsonDocument::parse(bad.dump(), "m").read([](Json const& j) { return read_structure(JNode(j)); }),
                  InputError);
}

TEST_CASE("law reports serialise witnesses", "[io]") {
  auto const r = check_bimonoid(conjugate_bimonoid(algebra_induced_functor(complex_over_rationals(2, 0)),
                                                   group_bimonoid(2)));
  auto const j = write_law_report(r);
  CHECK(j["passed"] == false);
  bool found = false;
  for (auto const& e : j["entries"])
    if (e["law"] == "counit-unit") {
      found = true;
      CHECK(e["passed"] == false);
      CHECK(e["witness"]["lhs"]["matrix"] == Json::parse(R"([["2"]])"));
      CHECK(e["witness"]["rhs"]["matrix"] == Json::parse(R"([["1"]])"));
    }
  CHECK(found);
}
