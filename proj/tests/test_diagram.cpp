#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace froblab;

TEST_CASE("scheme validation flags undeclared labels and duplicates", "[diagram]") {
  TensorScheme s{{"A"}, {{"f", {"A"}, {"B"}}, {"f", {"A"}, {"A"}}}};
  auto const v = validate_scheme(s);
  CHECK_FALSE(v.ok());
  CHECK(v.undeclared_labels == std::vector<std::string>{"B"});
  CHECK(v.duplicate_symbols == std::vector<std::string>{"f"});
  CHECK(validate_scheme(catalog::frobenius_scheme()).ok());
}

TEST_CASE("slices must chain", "[diagram]") {
  auto const s = catalog::frobenius_scheme();
  Generator const mu = *s.find("mu");
  CHECK_THROWS_AS(LayeredDiagram({"A"}, {"A"}, {Slice{GeneratorNode{mu, 0}}}), DiagramError);
  CHECK_THROWS_AS(LayeredDiagram({"A", "A"}, {"A"}, {Slice{GeneratorNode{mu, 0}}, Slice{GeneratorNode{mu, 0}}}),
                  DiagramError);
  CHECK_THROWS_AS(compose(catalog::gen("mu"), catalog::gen("mu")), DiagramError);
}

TEST_CASE("composition and tensor keep node ids distinct", "[diagram]") {
  auto const d = tensor(catalog::bubble(), catalog::barbell());
  CHECK(d.input() == Word{"A"});
  CHECK(d.output() == Word{"A"});
  CHECK(d.node_count() == 4);
  std::set<NodeId> ids;
  for (auto const& n : d.nodes()) ids.insert(n.id);
  CHECK(ids.size() == 4);
}

TEST_CASE("topology of the catalogue diagrams", "[diagram][topology]") {
  auto const barbell = topology(catalog::barbell());
  CHECK(barbell.vertices == 2);
  CHECK(barbell.edges == 1);
  CHECK(barbell.components == 1);
  CHECK(barbell.betti1 == 0);
  CHECK(barbell.predicted_class == InvarianceClass::FrobeniusInvariant);

  auto const bubble = topology(catalog::bubble());
  CHECK(bubble.vertices == 4);
  CHECK(bubble.edges == 4);
  CHECK(bubble.components == 1);
  CHECK(bubble.betti1 == 1);
  CHECK(bubble.predicted_class == InvarianceClass::SeparableOnly);

  auto const wires = topology(catalog::two_wires());
  CHECK(wires.components == 2);
  CHECK(wires.predicted_class == InvarianceClass::NotGuaranteed);

  CHECK(topology(catalog::barbells(3)).components == 3);
  CHECK(topology(LayeredDiagram()).predicted_class == InvarianceClass::NotGuaranteed);
}

TEST_CASE("interchange preserves the value", "[diagram]") {
  // (mu (x) 1) then (1 (x) delta) on A A A: slide the nodes past each other.
  auto const s = catalog::frobenius_scheme();
  auto const d = tensor(compose(catalog::gen("mu"), identity_diagram({"A"})),
                        compose(identity_diagram({"A"}), catalog::gen("delta")));
  auto const v = catalog::algebra_labelling(complex_over_rationals(2, 0));
  auto const value = evaluate(d, v);
  for (std::size_t k = 0; k + 1 < d.slices().size(); ++k)
    if (auto const e = interchange(d, k)) CHECK(same_value(evaluate(*e, v), value));
  CHECK(same_value(evaluate(strip_identity_slices(d), v), value));
}

TEST_CASE("evaluation agrees with hand-assembled matrices", "[evaluate]") {
  Rng rng = trial_rng(21, 0, 0);
  TensorScheme const s{{"A", "B"}, {{"f", {"A", "B"}, {"B"}}, {"g", {"A"}, {"A", "A"}}, {"h", {}, {"B"}}}};
  // input A A B: slice 1 = g (x) A (x) B, slice 2 = A (x) A (x) f, slice 3 = A (x) A (x) B (x) h
  auto const f = *s.find("f");
  auto const g = *s.find("g");
  auto const h = *s.find("h");
  LayeredDiagram const d({"A", "A", "B"}, {"A", "A", "B", "B"},
                         {Slice{GeneratorNode{g, 0}, IdentityWire{"A"}, IdentityWire{"B"}},
                          Slice{IdentityWire{"A"}, IdentityWire{"A"}, GeneratorNode{f, 1}},
                          Slice{IdentityWire{"A"}, IdentityWire{"A"}, IdentityWire{"B"}, GeneratorNode{h, 2}}});
  std::size_t const a = 2, b = 3;
  Labelling v;
  v.objects.emplace("A", MatObject::single("A", a));
  v.objects.emplace("B", MatObject::single("B", b));
  v.nodes.emplace("f", random_morphism(rng, v.object(f.source), v.object(f.target)));
  v.nodes.emplace("g", random_morphism(rng, v.object(g.source), v.object(g.target)));
  v.nodes.emplace("h", random_morphism(rng, v.object(h.source), v.object(h.target)));

  using namespace oracle;
  auto const G = dense(v.node(g));
  auto const Fm = dense(v.node(f));
  auto const H = dense(v.node(h));
  auto const s1 = kron(kron(G, eye(a)), eye(b));
  auto const s2 = kron(eye(a * a), Fm);
  auto const s3 = kron(eye(a * a * b), H, a * a * b, 1);
  auto const expected = mul(s3, mul(s2, s1));
  CHECK(evaluate(d, v).matrix() == to_matrix(expected, a * a * b));
}

TEST_CASE("free evaluation relabels and checks arities", "[evaluate]") {
  TensorScheme const target{{"X"}, {{"m", {"X", "X"}, {"X"}}, {"u", {}, {"X"}}}};
  SchemeMap map;
  map.objects = {{"A", "X"}, {"B", "X"}};
  map.generators = {{"mu", "m"}, {"eta", "u"}};
  auto const d = compose(tensor(catalog::gen("eta"), identity_diagram({"A"})), catalog::gen("mu"));
  auto const image = free_evaluate(d, map, target);
  CHECK(image.input() == Word{"X"});
  CHECK(image.node_count() == 2);
  map.generators["mu"] = "u";
  CHECK_THROWS_AS(free_evaluate(d, map, target), EvaluationError);
}
