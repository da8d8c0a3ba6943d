#pragma once

#include <froblab/bimonoid.hpp>
#include <froblab/catalog.hpp>
#include <froblab/cauchy.hpp>
#include <froblab/chain.hpp>
#include <froblab/distributive.hpp>
#include <froblab/functor.hpp>
#include <froblab/prebimonoidal.hpp>
#include <froblab/random.hpp>
#include <froblab/yang_baxter.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace froblab {

enum class Expectation { Holds, Fails };

struct ScenarioCheck {
  std::string name;
  bool expected = true;
  bool observed = false;
  bool ok() const { return expected == observed; }
};

struct ScenarioResult {
  std::string name;
  std::string claim;
  Expectation expectation = Expectation::Holds;
  std::vector<ScenarioCheck> checks;

  bool passed() const {
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](auto const& c) { return c.ok(); });
  }
  /// "pass", "expected-failure confirmed" or "FAIL".
  std::string outcome() const {
    if (!passed()) return "FAIL";
    return expectation == Expectation::Fails ? "expected-failure confirmed" : "pass";
  }
};

struct ScenarioInfo {
  std::string name;
  std::string claim;
  Expectation expectation;
  std::function<void(ScenarioResult&, std::uint64_t)> body;
};

namespace detail {

inline MatObject obj(char const* label, std::size_t dim) { return MatObject::single(label, dim); }

inline FrobeniusFunctorHandle complex_functor() { return algebra_induced_functor(complex_over_rationals(2, 0)); }
inline FrobeniusFunctorHandle matrix_functor() { return algebra_induced_functor(matrix_algebra_frobenius(2)); }
inline FrobeniusFunctorHandle dual_functor() { return algebra_induced_functor(dual_numbers()); }

inline void expect(ScenarioResult& r, std::string name, bool expected, bool observed) {
  r.checks.push_back({std::move(name), expected, observed});
}

inline void yb_lax_preservation(ScenarioResult& r, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 10, 0);
  MatObject const A = obj("A", 2);
  MatObject const B = obj("B", 1);
  Matrix proj(2, 2);
  proj.set(0, 0, 1);
  std::vector<std::pair<std::string, LaxYBData>> ops{
      {"swap", LaxYBData::on_object(A, braiding<Rational>(A, A))},
      {"q-R(2)", LaxYBData::on_object(A, q_r_matrix(A, 2))},
      {"q-R(1/3)", LaxYBData::on_object(A, q_r_matrix(A, Rational(1, 3)))},
      {"zero", LaxYBData::on_object(A, Morphism(A * A, A * A, Matrix(4, 4)))},
      {"c(e x e), e idempotent", twisted_braiding_family<Rational>({Morphism(A, A, proj)})},
      {"c(g x g), g random invertible", twisted_braiding_family<Rational>({random_invertible(rng, A)})},
      {"braiding family on {B, A}", braiding_family<Rational>({B, A})}};
  for (auto const& F : {complex_functor(), matrix_functor()})
    for (auto const& [label, y] : ops) {
      expect(r, label + ": lax YB", true, check_lax_yb(y).all_passed());
      expect(r, label + ": conjugate by " + F.name + " is lax YB", true,
             check_lax_yb(conjugate_yb(F, y)).all_passed());
    }
}

inline void yb_not_preserved(ScenarioResult& r, std::uint64_t) {
  MatObject const A = obj("A", 2);
  auto const F = complex_functor();
  for (auto const& [label, y] : std::vector<std::pair<std::string, Morphism>>{
           {"swap", braiding<Rational>(A, A)}, {"q-R(2)", q_r_matrix(A, 2)}}) {
    auto const d = LaxYBData::on_object(A, y);
    expect(r, label + ": YB operator", true, check_yb(d).all_passed());
    auto const c = check_yb(conjugate_yb(F, d));
    expect(r, label + ": conjugate satisfies the hexagon", true, c.passed("hexagon"));
    expect(r, label + ": conjugate invertible", false, c.passed("invertible"));
  }
}

inline void weak_yb_preservation(ScenarioResult& r, std::uint64_t) {
  MatObject const A = obj("A", 2);
  auto const Fc = complex_functor();
  auto const Fm = matrix_functor();
  auto const swap = LaxYBData::on_object(A, braiding<Rational>(A, A));
  auto const qr = LaxYBData::on_object(A, q_r_matrix(A, 2));
  expect(r, "q-R(2) as weak YB with nabla = 1", true,
         check_weak_yb(weak_from_yb(A, q_r_matrix(A, 2))).all_passed());
  for (auto const* F : {&Fc, &Fm})
    for (auto const& [label, y] : std::vector<std::pair<std::string, LaxYBData>>{{"swap", swap}, {"q-R(2)", qr}}) {
      auto const w = weak_yb_from_conjugate(*F, y);
      expect(r, label + "^" + F->name + " weak YB", true, check_weak_yb(w).all_passed());
      expect(r, label + "^" + F->name + " invertible", false, check_yb(LaxYBData::on_object(w.carrier, w.y)).all_passed());
    }
  auto const w = weak_yb_from_conjugate(Fc, qr);
  expect(r, "weak YB q-R(2)^" + Fc.name + " conjugated by " + Fm.name, true,
         check_weak_yb(conjugate_weak_yb(Fm, w)).all_passed());
  expect(r, "weak YB q-R(2)^" + Fc.name + " conjugated by " + Fc.name, true,
         check_weak_yb(conjugate_weak_yb(Fc, w)).all_passed());
}

inline void weak_yb_from_splitting(ScenarioResult& r, std::uint64_t) {
  auto const Fc = complex_functor();
  {
    MatObject const A = obj("A", 1);
    auto const w = weak_yb_from_conjugate(Fc, LaxYBData::on_object(A, braiding<Rational>(A, A)));
    MatObject const D = w.carrier;
    auto const S = splitting_functor(D, w.nabla, 6);
    expect(r, "nabla preconditions (D = F A, A of dim 1)", true, check_nabla(w.nabla).all_passed());
    expect(r, "splitting functor Frobenius laws on {D, D D}", true,
           check_frobenius_functor(S, {D, D * D}).all_passed());
    expect(r, "splitting functor strong", false, is_strong(S, {D}));
    expect(r, "y round trip", true, same_value(conjugate_morphism(S, w.y, {D, D}, {D, D}), w.y));
    expect(r, "y morphism of C(D)", true, cd_morphism_check(w.y, 2, 2, w.nabla).all_passed());
  }
  MatObject const A = obj("A", 2);
  auto const w = weak_yb_from_conjugate(Fc, LaxYBData::on_object(A, q_r_matrix(A, 2)));
  MatObject const D = w.carrier;
  auto const S = splitting_functor(D, w.nabla, 3);
  expect(r, "nabla preconditions (q-R on A of dim 2)", true, check_nabla(w.nabla).all_passed());
  expect(r, "splitting functor Frobenius laws on {D}", true, check_frobenius_functor(S, {D}).all_passed());
  expect(r, "q-R y round trip", true, same_value(conjugate_morphism(S, w.y, {D, D}, {D, D}), w.y));
  expect(r, "q-R y' round trip", true, same_value(conjugate_morphism(S, w.y_prime, {D, D}, {D, D}), w.y_prime));
  expect(r, "q-R y morphism of C(D)", true, cd_morphism_check(w.y, 2, 2, w.nabla).all_passed());
  expect(r, "q-R y' morphism of C(D)", true, cd_morphism_check(w.y_prime, 2, 2, w.nabla).all_passed());
}

inline std::vector<std::pair<std::string, DistLawData>> swap_distributive_laws() {
  auto const z2a = monoid_from_constants(cyclic_group_constants(2), "A");
  auto const z2b = monoid_from_constants(cyclic_group_constants(2), "B");
  auto const z3b = monoid_from_constants(cyclic_group_constants(3), "B");
  return {{"swap on Z/2, Z/2", {z2a, z2b, braiding<Rational>(z2a.carrier, z2b.carrier)}},
          {"swap on Z/2, Z/3", {z2a, z3b, braiding<Rational>(z2a.carrier, z3b.carrier)}}};
}

inline void weak_distlaw_preservation(ScenarioResult& r, std::uint64_t) {
  auto const Fc = complex_functor();
  auto const Fm = matrix_functor();
  for (auto const& [label, d] : swap_distributive_laws()) {
    expect(r, label + ": distributive law", true, check_distributive_law(d).all_passed());
    for (auto const* F : {&Fc, &Fm})
      expect(r, label + ": conjugate by " + F->name + " weak", true,
             check_weak_distributive_law(conjugate_distributive_law(*F, d)).all_passed());
  }
  auto const d = swap_distributive_laws().front().second;
  expect(r, "weak law conjugated again", true,
         check_weak_distributive_law(conjugate_distributive_law(Fm, conjugate_distributive_law(Fc, d))).all_passed());
}

inline void distlaw_not_preserved(ScenarioResult& r, std::uint64_t) {
  auto const Fc = complex_functor();
  for (auto const& [label, d] : swap_distributive_laws()) {
    auto const c = check_distributive_law(conjugate_distributive_law(Fc, d));
    expect(r, label + ": conjugate multiplication laws", true,
           c.passed("mult-left") && c.passed("mult-right"));
    expect(r, label + ": conjugate unit-left", false, c.passed("unit-left"));
    expect(r, label + ": conjugate unit-right", false, c.passed("unit-right"));
    expect(r, label + ": conjugate distributive law", false, c.all_passed());
  }
}

inline void weak_bimonoid_preservation(ScenarioResult& r, std::uint64_t) {
  auto const Fc = complex_functor();
  auto const P = strong_permutation_functor<Rational>();
  expect(r, P.name + " braided", true, check_braided_functor(P, {obj("G", 2), obj("G", 3)}).all_passed());
  for (std::size_t n : {2, 3}) {
    auto const b = group_bimonoid(n);
    expect(r, b.name + ": bimonoid", true, check_bimonoid(b).all_passed());
    for (auto const* F : {&Fc, &P})
      expect(r, b.name + ": conjugate by " + F->name + " weak", true,
             check_weak_bimonoid(conjugate_bimonoid(*F, b)).all_passed());
  }
}

inline void bimonoid_not_preserved(ScenarioResult& r, std::uint64_t) {
  auto const Fc = complex_functor();
  for (std::size_t n : {2, 3}) {
    auto const b = group_bimonoid(n);
    auto const c = check_bimonoid(conjugate_bimonoid(Fc, b));
    expect(r, b.name + ": conjugate mult-comult", true, c.passed("mult-comult"));
    expect(r, b.name + ": conjugate counit-unit", false, c.passed("counit-unit"));
    expect(r, b.name + ": conjugate bimonoid", false, c.all_passed());
  }
}

/// b's matching the per-position products of a chain of a_i = p_i (x) q_i.
inline std::vector<Morphism> matching_chain(MatObject const& a, std::vector<std::pair<Morphism, Morphism>> const& pq) {
  std::size_t const n = pq.size();
  Morphism P1 = identity<Rational>(a), P2 = P1, P3 = P1;
  for (std::size_t k = 1; k <= n; ++k) {
    bool const top = (n - k) % 2 == 0;
    auto const& [p, q] = pq[k - 1];
    if (top) {
      P1 = compose(p, P1);
      P2 = compose(q, P2);
    } else {
      P2 = compose(p, P2);
      P3 = compose(q, P3);
    }
  }
  auto const one = identity<Rational>(a);
  std::vector<Morphism> bs(n, identity<Rational>(a * a));
  bool const first_top = (n - 1) % 2 == 1;
  if (first_top) {
    bs[0] = tensor(P1, P2);
    bs[1] = tensor(one, P3);
  } else {
    bs[0] = tensor(P2, P3);
    bs[1] = tensor(P1, one);
  }
  return bs;
}

inline void alternating_chain_scenario(ScenarioResult& r, std::uint64_t seed) {
  MatObject const A = obj("A", 2);
  auto const Fc = complex_functor();
  auto const Fm = matrix_functor();
  auto const Fd = dual_functor();
  auto run = [&](std::string const& label, std::vector<Morphism> const& as, std::vector<Morphism> const& bs,
                 bool with_dual) {
    expect(r, label + ": equation", true, chain_equation_holds(A, as, bs));
    for (auto const* F : {&Fc, &Fm})
      expect(r, label + ": conjugate by " + F->name, true, conjugate_chain_equation_holds(*F, A, as, bs));
    if (with_dual)
      expect(r, label + ": conjugate by " + Fd.name, true, conjugate_chain_equation_holds(Fd, A, as, bs));
  };
  Rng rng = trial_rng(seed, 11, 0);
  for (std::size_t n : {2, 3, 4}) {
    std::vector<std::pair<Morphism, Morphism>> pq;
    std::vector<Morphism> as;
    for (std::size_t i = 0; i < n; ++i) {
      pq.emplace_back(random_morphism(rng, A, A), random_morphism(rng, A, A));
      as.push_back(tensor(pq.back().first, pq.back().second));
    }
    run("n=" + std::to_string(n) + " decomposable", as, matching_chain(A, pq), n == 2);
  }
  for (auto const& [label, y] : std::vector<std::pair<std::string, Morphism>>{
           {"q-R(2)", q_r_matrix(A, 2)},
           {"c(g x g)", twisted_braiding_family<Rational>({random_invertible(rng, A)}).at(0, 0)}}) {
    run("n=3 " + label, {y, y, y}, {y, y, y}, false);
    auto const one = identity<Rational>(A * A);
    run("n=4 " + label, {y, y, y, one}, {y, y, y, one}, false);
  }
}

inline void prebimonoidal_compose(ScenarioResult& r, std::uint64_t) {
  auto const F = complex_functor();
  auto const G = complex_functor();
  auto const y = braiding_family<Rational>({obj("B", 1), obj("A", 2)});
  auto const z = conjugate_yb(F, y);
  auto const w = conjugate_yb(G, z);
  auto const GF = composite_functor(G, F);
  auto const q = all_quadruples(2);
  expect(r, "F relative to (y, y^F)", true, check_prebimonoidal(F, y, z, q).all_passed());
  expect(r, "G relative to (y^F, y^FG)", true, check_prebimonoidal(G, z, w, q).all_passed());
  expect(r, "GF relative to (y, y^FG)", true, check_prebimonoidal(GF, y, w, q).all_passed());
}

inline std::vector<Quadruple> random_quadruples(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<Quadruple> r;
  for (std::size_t i = 0; i < count; ++i)
    r.push_back({uniform_index(rng, n), uniform_index(rng, n), uniform_index(rng, n), uniform_index(rng, n)});
  return r;
}

inline void prebimonoidal_from_separable(ScenarioResult& r, std::uint64_t seed) {
  Rng rng = trial_rng(seed, 12, 0);
  MatObject const A = obj("A", 2);
  std::vector<MatObject> const carriers{obj("B", 1), A, obj("E", 2)};
  std::vector<Morphism> g;
  for (auto const& c : carriers) g.push_back(random_invertible(rng, c));
  std::vector<std::pair<std::string, LaxYBData>> const ys{
      {"braiding family", braiding_family<Rational>(carriers)},
      {"twisted braiding family", twisted_braiding_family<Rational>(g)},
      {"q-R(2)", LaxYBData::on_object(A, q_r_matrix(A, 2))}};
  for (auto const& F : {complex_functor(), matrix_functor()})
    for (auto const& [label, y] : ys) {
      auto const samples = y.size() == 1 ? all_quadruples(1) : random_quadruples(rng, y.size(), 24);
      expect(r, label + " under " + F.name, true, check_prebimonoidal(F, y, conjugate_yb(F, y), samples).all_passed());
    }
}

inline void strong_iff_braided(ScenarioResult& r, std::uint64_t) {
  std::vector<MatObject> const carriers{MatObject(), obj("A", 2), obj("E", 3)};
  auto const q = all_quadruples(carriers.size());
  for (auto const& F : {identity_functor<Rational>(), strong_permutation_functor<Rational>(),
                        strong_twisted_functor<Rational>()}) {
    expect(r, F.name + ": strong", true, is_strong(F, carriers));
    bool const braided = check_braided_functor(F, carriers).all_passed();
    bool const pre = check_prebimonoidal_braided(F, carriers, q).all_passed();
    expect(r, F.name + ": braided iff prebimonoidal", true, braided == pre);
    expect(r, F.name + ": braided", F.kind != FunctorKind::StrongTwisted, braided);
  }
}

inline void barbell_counterexample(ScenarioResult& r, std::uint64_t) {
  auto const Fc = complex_functor();
  auto const Fd = dual_functor();
  auto const v = catalog::terminal_labelling();
  for (std::size_t k : {1, 2, 3})
    expect(r, std::to_string(k) + " barbell(s) invariant under " + Fc.name, k == 1,
           verify_invariance(Fc, catalog::barbells(k), v).equal);
  Labelling two = v;
  two.objects["A"] = obj("A", 2);
  two.objects["B"] = obj("B", 3);
  expect(r, "two parallel wires invariant under " + Fc.name, false,
         verify_invariance(Fc, catalog::two_wires(), two).equal);
  auto const dual = catalog::algebra_labelling(dual_numbers());
  expect(r, "dual-number barbell vanishes", true, evaluate(catalog::barbell(), dual).matrix().is_zero());
  expect(r, "dual-number barbell invariant under " + Fc.name, true,
         verify_invariance(Fc, catalog::barbell(), dual).equal);
  expect(r, "dual-number bubble invariant under " + Fd.name, false,
         verify_invariance(Fd, catalog::bubble(), dual).equal);
}

}  // namespace detail

inline std::vector<ScenarioInfo> const& scenario_registry() {
  static std::vector<ScenarioInfo> const r{
      {"yb-lax-preservation", "lax YB operators conjugate to lax YB operators", Expectation::Holds,
       detail::yb_lax_preservation},
      {"yb-not-preserved", "the conjugate of a YB operator need not be invertible", Expectation::Fails,
       detail::yb_not_preserved},
      {"weak-yb-preservation", "conjugates of YB and weak YB operators are weak YB", Expectation::Holds,
       detail::weak_yb_preservation},
      {"weak-yb-from-splitting", "a weak YB operator is a YB operator in the Cauchy completion",
       Expectation::Holds, detail::weak_yb_from_splitting},
      {"weak-distlaw-preservation", "conjugates of distributive laws are weak distributive laws",
       Expectation::Holds, detail::weak_distlaw_preservation},
      {"distlaw-not-preserved", "the strict unit laws fail after conjugation", Expectation::Fails,
       detail::distlaw_not_preserved},
      {"weak-bimonoid-preservation", "conjugates of bimonoids are weak bimonoids", Expectation::Holds,
       detail::weak_bimonoid_preservation},
      {"bimonoid-not-preserved", "the counit-unit law fails after conjugation", Expectation::Fails,
       detail::bimonoid_not_preserved},
      {"alternating-chain", "alternating chain equations survive conjugation", Expectation::Holds,
       detail::alternating_chain_scenario},
      {"prebimonoidal-compose", "prebimonoidal functors compose", Expectation::Holds,
       detail::prebimonoidal_compose},
      {"prebimonoidal-from-separable", "separable Frobenius functors are prebimonoidal", Expectation::Holds,
       detail::prebimonoidal_from_separable},
      {"strong-iff-braided", "a strong functor is braided iff prebimonoidal for the braiding",
       Expectation::Holds, detail::strong_iff_braided},
      {"barbell-counterexample", "invariance fails for disconnected diagrams", Expectation::Fails,
       detail::barbell_counterexample}};
  return r;
}

inline std::vector<std::string> scenario_names() {
  std::vector<std::string> r;
  for (auto const& s : scenario_registry()) r.push_back(s.name);
  return r;
}

inline ScenarioResult run_scenario(std::string const& name, std::uint64_t seed = 0) {
  for (auto const& s : scenario_registry())
    if (s.name == name) {
      ScenarioResult r{s.name, s.claim, s.expectation, {}};
      s.body(r, seed);
      return r;
    }
  throw Error("unknown scenario '" + name + "'");
}

}  // namespace froblab
