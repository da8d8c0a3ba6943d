#pragma once

#include <froblab/algebra.hpp>
#include <froblab/evaluate.hpp>
#include <froblab/law_report.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace froblab {

enum class FunctorKind {
  Identity,
  AlgebraInduced,
  Splitting,
  Composite,
  StrongPermutation,
  StrongTwisted,
  Custom
};

inline char const* to_string(FunctorKind k) {
  switch (k) {
    case FunctorKind::Identity: return "identity";
    case FunctorKind::AlgebraInduced: return "algebra-induced";
    case FunctorKind::Splitting: return "splitting";
    case FunctorKind::Composite: return "composite";
    case FunctorKind::StrongPermutation: return "strong-permutation";
    case FunctorKind::StrongTwisted: return "strong-twisted";
    case FunctorKind::Custom: return "custom";
  }
  return "?";
}

/// A functor between matrix categories carrying a monoidal structure
/// (phi, phi0) and an opmonoidal structure (psi, psi0). Nothing about the
/// laws is assumed; check_frobenius_functor verifies them on samples.
template <Scalar S>
struct BasicFrobeniusFunctor {
  using Mor = BasicMorphism<S>;

  std::string name;
  FunctorKind kind = FunctorKind::Custom;
  std::function<MatObject(MatObject const&)> object_map;
  std::function<Mor(Mor const&)> morphism_map;
  std::function<Mor(MatObject const&, MatObject const&)> phi;  // FA FB -> F(AB)
  std::function<Mor(MatObject const&, MatObject const&)> psi;  // F(AB) -> FA FB
  Mor phi0;                                                    // I -> FI
  Mor psi0;                                                    // FI -> I
  std::optional<BasicFrobeniusAlgebra<S>> algebra;             // set for AlgebraInduced

  MatObject operator()(MatObject const& a) const { return object_map(a); }
  Mor operator()(Mor const& f) const { return morphism_map(f); }
};

using FrobeniusFunctorHandle = BasicFrobeniusFunctor<Rational>;

template <Scalar S>
BasicFrobeniusFunctor<S> identity_functor() {
  BasicFrobeniusFunctor<S> F;
  F.name = "identity";
  F.kind = FunctorKind::Identity;
  F.object_map = [](MatObject const& a) { return a; };
  F.morphism_map = [](BasicMorphism<S> const& f) { return f; };
  F.phi = [](MatObject const& a, MatObject const& b) { return identity<S>(a * b); };
  F.psi = F.phi;
  F.phi0 = identity<S>(MatObject());
  F.psi0 = identity<S>(MatObject());
  return F;
}

/// F A = A (x) C, F f = f (x) 1_C, with phi merging the two copies of C by
/// mu after braiding C past B and psi splitting by delta.
template <Scalar S>
BasicFrobeniusFunctor<S> algebra_induced_functor(BasicFrobeniusAlgebra<S> const& alg,
                                                 double tolerance = 1e-9) {
  auto const report = check_frobenius_algebra(alg, false, tolerance);
  if (!report.all_passed())
    throw LawError("algebra '" + alg.name + "' is not Frobenius", report.failures());

  MatObject const C = alg.carrier;
  BasicFrobeniusFunctor<S> F;
  F.name = "induced(" + alg.name + ")";
  F.kind = FunctorKind::AlgebraInduced;
  F.algebra = alg;
  F.object_map = [C](MatObject const& a) { return a * C; };
  F.morphism_map = [C](BasicMorphism<S> const& f) { return tensor(f, identity<S>(C)); };
  auto const mu = alg.mu;
  auto const delta = alg.delta;
  F.phi = [C, mu](MatObject const& a, MatObject const& b) {
    auto m = then(whisker(a, braiding<S>(C, b), C), tensor(identity<S>(a * b), mu));
    return m.retyped(a * C * b * C, a * b * C);
  };
  F.psi = [C, delta](MatObject const& a, MatObject const& b) {
    auto m = then(tensor(identity<S>(a * b), delta), whisker(a, braiding<S>(b, C), C));
    return m.retyped(a * b * C, a * C * b * C);
  };
  F.phi0 = alg.eta;
  F.psi0 = alg.epsilon;
  return F;
}

/// G after F.
template <Scalar S>
BasicFrobeniusFunctor<S> composite_functor(BasicFrobeniusFunctor<S> const& G,
                                           BasicFrobeniusFunctor<S> const& F) {
  BasicFrobeniusFunctor<S> H;
  H.name = G.name + "." + F.name;
  H.kind = FunctorKind::Composite;
  H.object_map = [G, F](MatObject const& a) { return G.object_map(F.object_map(a)); };
  H.morphism_map = [G, F](BasicMorphism<S> const& f) { return G.morphism_map(F.morphism_map(f)); };
  H.phi = [G, F](MatObject const& a, MatObject const& b) {
    return compose(G.morphism_map(F.phi(a, b)), G.phi(F.object_map(a), F.object_map(b)));
  };
  H.psi = [G, F](MatObject const& a, MatObject const& b) {
    return compose(G.psi(F.object_map(a), F.object_map(b)), G.morphism_map(F.psi(a, b)));
  };
  H.phi0 = compose(G.morphism_map(F.phi0), G.phi0);
  H.psi0 = compose(G.psi0, G.morphism_map(F.psi0));
  return H;
}

namespace detail {

/// Cyclic shift of the total basis of a word by one place.
template <Scalar S>
BasicMatrix<S> cyclic_shift(std::size_t d) {
  BasicMatrix<S> m(d, d);
  for (std::size_t i = 0; i < d; ++i) m.set((i + 1) % d, i, S(1));
  return m;
}

/// Z/2 x Z/2 grade of basis vector `index` of word `a`: the sum over factors
/// of (digit mod 2, (digit / 2) mod 2).
inline std::pair<int, int> basis_grade(MatObject const& a, std::size_t index) {
  int g0 = 0;
  int g1 = 0;
  auto const& fs = a.factors();
  for (std::size_t k = fs.size(); k-- > 0;) {
    std::size_t const digit = index % fs[k].dim;
    index /= fs[k].dim;
    g0 ^= static_cast<int>(digit & 1U);
    g1 ^= static_cast<int>((digit >> 1) & 1U);
  }
  return {g0, g1};
}

}  // namespace detail

/// Identity transported along g_W = cyclic basis shift of each word W:
/// F f = g f g^-1 and phi_{A,B} = g_{AB} (g_A (x) g_B)^-1. Strong monoidal
/// and braided.
template <Scalar S>
BasicFrobeniusFunctor<S> strong_permutation_functor() {
  BasicFrobeniusFunctor<S> F;
  F.name = "strong-permutation";
  F.kind = FunctorKind::StrongPermutation;
  auto g = [](MatObject const& w) { return BasicMorphism<S>(w, w, detail::cyclic_shift<S>(w.dimension())); };
  auto g_inv = [](MatObject const& w) {
    return BasicMorphism<S>(w, w, transpose(detail::cyclic_shift<S>(w.dimension())));
  };
  F.object_map = [](MatObject const& a) { return a; };
  F.morphism_map = [g, g_inv](BasicMorphism<S> const& f) {
    return then(g_inv(f.dom()), f, g(f.cod()));
  };
  F.phi = [g, g_inv](MatObject const& a, MatObject const& b) {
    return compose(g(a * b), tensor(g_inv(a), g_inv(b)));
  };
  F.psi = [g, g_inv](MatObject const& a, MatObject const& b) {
    return compose(tensor(g(a), g(b)), g_inv(a * b));
  };
  F.phi0 = identity<S>(MatObject());
  F.psi0 = identity<S>(MatObject());
  return F;
}

/// Identity on objects and morphisms with phi twisted by the bicharacter
/// w(g, h) = (-1)^(g0 h1) of the Z/2 x Z/2 basis grading. Strong monoidal
/// (on grade-preserving maps) but not braided once a factor has dimension >= 3.
template <Scalar S>
BasicFrobeniusFunctor<S> strong_twisted_functor() {
  BasicFrobeniusFunctor<S> F;
  F.name = "strong-twisted";
  F.kind = FunctorKind::StrongTwisted;
  F.object_map = [](MatObject const& a) { return a; };
  F.morphism_map = [](BasicMorphism<S> const& f) { return f; };
  F.phi = [](MatObject const& a, MatObject const& b) {
    std::size_t const da = a.dimension();
    std::size_t const db = b.dimension();
    BasicMatrix<S> m(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < db; ++j) {
        int const sign = detail::basis_grade(a, i).first * detail::basis_grade(b, j).second;
        m.set(i * db + j, i * db + j, sign ? S(-1) : S(1));
      }
    return BasicMorphism<S>(a * b, a * b, std::move(m));
  };
  F.psi = F.phi;
  F.phi0 = identity<S>(MatObject());
  F.psi0 = identity<S>(MatObject());
  return F;
}

/// phi_{A1..An}: FA1 ... FAn -> F(A1 ... An), left nested. n = 0 gives
/// phi0 and n = 1 the identity.
template <Scalar S>
BasicMorphism<S> nary_phi(BasicFrobeniusFunctor<S> const& F, std::vector<MatObject> const& parts) {
  if (parts.empty()) return F.phi0;
  MatObject prefix = parts.front();
  BasicMorphism<S> acc = identity<S>(F(prefix));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = then(tensor(acc, identity<S>(F(parts[i]))), F.phi(prefix, parts[i]));
    prefix = prefix * parts[i];
  }
  return acc;
}

/// psi_{A1..An}: F(A1 ... An) -> FA1 ... FAn, left nested.
template <Scalar S>
BasicMorphism<S> nary_psi(BasicFrobeniusFunctor<S> const& F, std::vector<MatObject> const& parts) {
  if (parts.empty()) return F.psi0;
  MatObject prefix = parts.front();
  BasicMorphism<S> acc = identity<S>(F(prefix));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = then(F.psi(prefix, parts[i]), tensor(acc, identity<S>(F(parts[i]))));
    prefix = prefix * parts[i];
  }
  return acc;
}

/// Splits a word into its single-factor objects.
inline std::vector<MatObject> factor_parts(MatObject const& a) {
  std::vector<MatObject> r;
  for (auto const& f : a.factors()) r.push_back(MatObject({f}));
  return r;
}

/// f^F = psi_{B1..Bm} o F f o phi_{A1..An} for f: A1..An -> B1..Bm.
template <Scalar S>
BasicMorphism<S> conjugate_morphism(BasicFrobeniusFunctor<S> const& F, BasicMorphism<S> const& f,
                                    std::vector<MatObject> const& dom_parts,
                                    std::vector<MatObject> const& cod_parts) {
  MatObject const dom = tensor_all(dom_parts);
  MatObject const cod = tensor_all(cod_parts);
  if (dom.dimension() != f.dom().dimension() || cod.dimension() != f.cod().dimension()) {
    throw ShapeError("conjugate: " + f.dom().to_string() + " -> " + f.cod().to_string() +
                     " does not factor as " + dom.to_string() + " -> " + cod.to_string());
  }
  return then(nary_phi(F, dom_parts), F(f.retyped(dom, cod)), nary_psi(F, cod_parts));
}

template <Scalar S>
BasicMorphism<S> conjugate_morphism(BasicFrobeniusFunctor<S> const& F, BasicMorphism<S> const& f) {
  return conjugate_morphism(F, f, factor_parts(f.dom()), factor_parts(f.cod()));
}

/// Conjugate of an endomorphism-like map on tensor powers of one object.
template <Scalar S>
BasicMorphism<S> conjugate_on(BasicFrobeniusFunctor<S> const& F, BasicMorphism<S> const& f,
                              MatObject const& a, std::size_t n_in, std::size_t n_out) {
  return conjugate_morphism(F, f, std::vector<MatObject>(n_in, a),
                            std::vector<MatObject>(n_out, a));
}

/// v^F: wires labelled F v(gamma), nodes labelled v(x)^F.
template <Scalar S>
BasicLabelling<S> conjugate_labelling(BasicFrobeniusFunctor<S> const& F,
                                      BasicLabelling<S> const& v,
                                      std::vector<Generator> const& generators) {
  BasicLabelling<S> r;
  for (auto const& [label, obj] : v.objects) r.objects.emplace(label, F(obj));
  for (auto const& g : generators) {
    if (r.nodes.contains(g.name)) continue;
    auto const& f = v.node(g);
    r.nodes.emplace(g.name, conjugate_morphism(F, f, v.objects_of(g.source), v.objects_of(g.target)));
  }
  return r;
}

template <Scalar S>
BasicLabelling<S> conjugate_labelling(BasicFrobeniusFunctor<S> const& F,
                                      BasicLabelling<S> const& v, LayeredDiagram const& d) {
  std::vector<Generator> gens;
  for (auto const& n : d.nodes()) gens.push_back(n.generator);
  return conjugate_labelling(F, v, gens);
}

template <Scalar S>
struct InvarianceResult {
  BasicMorphism<S> lhs;  // value of the conjugate diagram
  BasicMorphism<S> rhs;  // conjugate of the value
  bool equal = false;
};

/// Compares v^F(Gamma) with v(Gamma)^F.
template <Scalar S>
InvarianceResult<S> verify_invariance(BasicFrobeniusFunctor<S> const& F, LayeredDiagram const& d,
                                      BasicLabelling<S> const& v, double tolerance = 1e-9) {
  auto lhs = evaluate(d, conjugate_labelling(F, v, d));
  auto const value = evaluate(d, v);
  auto rhs = conjugate_morphism(F, value, v.objects_of(d.input()), v.objects_of(d.output()));
  bool const equal = same_value(lhs, rhs, tolerance);
  return {std::move(lhs), std::move(rhs), equal};
}

namespace detail {

inline std::string objects_context(std::vector<MatObject> const& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].to_string();
  return s + ")";
}

}  // namespace detail

/// Monoidal and opmonoidal coherence, both Frobenius squares and
/// separability, on all pairs and triples drawn from `samples`.
template <Scalar S>
BasicLawReport<S> check_frobenius_functor(BasicFrobeniusFunctor<S> const& F,
                                          std::vector<MatObject> const& samples,
                                          double tolerance = 1e-9) {
  if (samples.empty()) throw Error("check_frobenius_functor: no sample objects");
  BasicLawReport<S> report(tolerance);
  MatObject const I;
  auto id = [&](MatObject const& a) { return identity<S>(F(a)); };

  for (auto const& a : samples) {
    std::string const ctx = detail::objects_context({a});
    report.expect_equal("phi-left-unit", compose(F.phi(I, a), tensor(F.phi0, id(a))), id(a), ctx);
    report.expect_equal("phi-right-unit", compose(F.phi(a, I), tensor(id(a), F.phi0)), id(a), ctx);
    report.expect_equal("psi-left-counit", compose(tensor(F.psi0, id(a)), F.psi(I, a)), id(a), ctx);
    report.expect_equal("psi-right-counit", compose(tensor(id(a), F.psi0), F.psi(a, I)), id(a), ctx);
  }
  for (auto const& a : samples) {
    for (auto const& b : samples) {
      std::string const ctx2 = detail::objects_context({a, b});
      report.expect_equal("separability", compose(F.phi(a, b), F.psi(a, b)), id(a * b), ctx2);
      for (auto const& c : samples) {
        std::string const ctx = detail::objects_context({a, b, c});
        report.expect_equal("phi-associativity",
                            compose(F.phi(a * b, c), tensor(F.phi(a, b), id(c))),
                            compose(F.phi(a, b * c), tensor(id(a), F.phi(b, c))), ctx);
        report.expect_equal("psi-coassociativity",
                            compose(tensor(F.psi(a, b), id(c)), F.psi(a * b, c)),
                            compose(tensor(id(a), F.psi(b, c)), F.psi(a, b * c)), ctx);
        // F(AB) FC -> FA F(BC)
        report.expect_equal("frobenius-square-1", compose(F.psi(a, b * c), F.phi(a * b, c)),
                            compose(tensor(id(a), F.phi(b, c)), tensor(F.psi(a, b), id(c))), ctx);
        // FA F(BC) -> F(AB) FC
        report.expect_equal("frobenius-square-2", compose(F.psi(a * b, c), F.phi(a, b * c)),
                            compose(tensor(F.phi(a, b), id(c)), tensor(id(a), F.psi(b, c))), ctx);
      }
    }
  }
  return report;
}

/// Strong monoidal on the samples: separable, psi o phi = 1 and phi0, psi0
/// mutually inverse.
template <Scalar S>
BasicLawReport<S> check_strong(BasicFrobeniusFunctor<S> const& F,
                               std::vector<MatObject> const& samples, double tolerance = 1e-9) {
  BasicLawReport<S> report(tolerance);
  for (auto const& a : samples)
    for (auto const& b : samples) {
      std::string const ctx = detail::objects_context({a, b});
      report.expect_equal("separability", compose(F.phi(a, b), F.psi(a, b)), identity<S>(F(a * b)), ctx);
      report.expect_equal("phi-invertible", compose(F.psi(a, b), F.phi(a, b)),
                          identity<S>(F(a) * F(b)), ctx);
    }
  report.expect_equal("unit-inverse-left", compose(F.psi0, F.phi0), identity<S>(MatObject()));
  report.expect_equal("unit-inverse-right", compose(F.phi0, F.psi0), identity<S>(F(MatObject())));
  return report;
}

template <Scalar S>
bool is_strong(BasicFrobeniusFunctor<S> const& F, std::vector<MatObject> const& samples,
               double tolerance = 1e-9) {
  return check_strong(F, samples, tolerance).all_passed();
}

/// (c_{A,B})^F = c_{FA,FB} on all sample pairs.
template <Scalar S>
BasicLawReport<S> check_braided_functor(BasicFrobeniusFunctor<S> const& F,
                                        std::vector<MatObject> const& samples,
                                        double tolerance = 1e-9) {
  BasicLawReport<S> report(tolerance);
  for (auto const& a : samples)
    for (auto const& b : samples)
      report.expect_equal("braided", conjugate_morphism(F, braiding<S>(a, b), {a, b}, {b, a}),
                          braiding<S>(F(a), F(b)), detail::objects_context({a, b}));
  return report;
}

}  // namespace froblab
