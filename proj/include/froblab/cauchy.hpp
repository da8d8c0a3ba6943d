#pragma once

#include <froblab/functor.hpp>

#include <memory>
#include <string>
#include <vector>

namespace froblab {

/// An object (A, e) of the idempotent-splitting completion. Its identity
/// morphism is e.
template <Scalar S>
struct CauchyObject {
  MatObject base;
  BasicMorphism<S> idem;

  static CauchyObject make(BasicMorphism<S> e, double tolerance = 1e-9) {
    if (!is_idempotent(e, tolerance)) throw Error("CauchyObject: morphism is not idempotent");
    return {e.dom(), std::move(e)};
  }

  BasicMorphism<S> const& identity_morphism() const noexcept { return idem; }
};

/// f: (A, e) -> (B, p) is a morphism of the completion iff p f e = f.
template <Scalar S>
bool is_cauchy_morphism(BasicMorphism<S> const& f, CauchyObject<S> const& from,
                        CauchyObject<S> const& to, double tolerance = 1e-9) {
  return same_value(then(from.idem, f, to.idem), f, tolerance);
}

template <Scalar S>
CauchyObject<S> tensor(CauchyObject<S> const& a, CauchyObject<S> const& b) {
  return {a.base * b.base, tensor(a.idem, b.idem)};
}

namespace detail {

template <Scalar S>
MatObject nabla_carrier(BasicMorphism<S> const& nabla) {
  MatObject const& DD = nabla.dom();
  if (DD.size() % 2 != 0 || nabla.cod().dimension() != DD.dimension())
    throw ShapeError("nabla must be an endomorphism of a word D D");
  std::vector<Factor> half(DD.factors().begin(), DD.factors().begin() + DD.size() / 2);
  MatObject D(std::move(half));
  if (D * D != DD) throw ShapeError("nabla: domain " + DD.to_string() + " is not of the form D D");
  return D;
}

}  // namespace detail

/// The interchange precondition (nabla (x) 1)(1 (x) nabla) = (1 (x) nabla)(nabla (x) 1)
/// together with idempotency of nabla.
template <Scalar S>
BasicLawReport<S> check_nabla(BasicMorphism<S> const& nabla, double tolerance = 1e-9) {
  MatObject const D = detail::nabla_carrier(nabla);
  auto const one = identity<S>(D);
  BasicLawReport<S> report(tolerance);
  report.expect_equal("idempotent", compose(nabla, nabla), nabla);
  report.expect_equal("nabla-interchange", compose(tensor(nabla, one), tensor(one, nabla)),
                      compose(tensor(one, nabla), tensor(nabla, one)));
  return report;
}

namespace detail {

template <Scalar S>
BasicMorphism<S> nabla_power(BasicMorphism<S> const& nabla, MatObject const& D, std::size_t n) {
  if (n == 0) return identity<S>(MatObject());
  if (n == 1) return identity<S>(D);
  auto const dd = nabla.retyped(D * D, D * D);
  if (n == 2) return dd;
  return compose(tensor(identity<S>(D), nabla_power(nabla, D, n - 1)),
                 tensor(dd, identity<S>(D.power(n - 2))));
}

}  // namespace detail

/// nabla_0 = 1_I, nabla_1 = 1_D, nabla_2 = nabla,
/// nabla_n = (1 (x) nabla_{n-1}) o (nabla (x) 1).
template <Scalar S>
BasicMorphism<S> nabla_n(BasicMorphism<S> const& nabla, std::size_t n, double tolerance = 1e-9) {
  auto const pre = check_nabla(nabla, tolerance);
  if (!pre.all_passed()) throw LawError("nabla_n: precondition fails", pre.failures());
  return detail::nabla_power(nabla, detail::nabla_carrier(nabla), n);
}

/// Side conditions for f: D^n -> D^m to be a morphism of C(D):
/// (1 (x) f)(nabla_n (x) 1) = (nabla_m (x) 1)(1 (x) f) and the mirror.
template <Scalar S>
BasicLawReport<S> cd_morphism_check(BasicMorphism<S> const& f, std::size_t n, std::size_t m,
                                    BasicMorphism<S> const& nabla, double tolerance = 1e-9) {
  MatObject const D = detail::nabla_carrier(nabla);
  if (f.dom().dimension() != D.power(n).dimension() || f.cod().dimension() != D.power(m).dimension())
    throw ShapeError("cd_morphism_check: morphism is not D^" + std::to_string(n) + " -> D^" +
                     std::to_string(m));
  auto const nn = nabla_n(nabla, n, tolerance);
  auto const nm = nabla_n(nabla, m, tolerance);
  auto const g = f.retyped(D.power(n), D.power(m));
  auto const one = identity<S>(D);
  BasicLawReport<S> report(tolerance);
  report.expect_equal("cauchy-morphism", then(nn, g, nm), g);
  report.expect_equal("slide-left", compose(tensor(one, g), tensor(nn, one)),
                      compose(tensor(nm, one), tensor(one, g)));
  report.expect_equal("slide-right", compose(tensor(g, one), tensor(one, nn)),
                      compose(tensor(one, nm), tensor(g, one)));
  return report;
}

/// The functor C(D) -> Mat sending (D^n, nabla_n) to a splitting of
/// nabla_n. Source objects are the words D^n for n <= max_n.
template <Scalar S>
BasicFrobeniusFunctor<S> splitting_functor(MatObject const& D, BasicMorphism<S> const& nabla,
                                           std::size_t max_n = 4, double tolerance = 1e-9) {
  if (D.is_unit()) throw Error("splitting_functor: D must be a nonempty word");
  if (nabla.dom().dimension() != (D * D).dimension() || nabla.cod().dimension() != (D * D).dimension())
    throw ShapeError("splitting_functor: nabla must be an endomorphism of D D");
  auto const dd = nabla.retyped(D * D, D * D);
  auto const pre = check_nabla(dd, tolerance);
  if (!pre.all_passed()) throw LawError("splitting_functor: precondition fails", pre.failures());

  auto splits = std::make_shared<std::vector<Splitting<S>>>();
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto s = split_idempotent(detail::nabla_power(dd, D, n), "D" + std::to_string(n), tolerance);
    splits->push_back(std::move(s));
  }
  auto power_of = [D, max_n](MatObject const& a) {
    if (a.size() % D.size() != 0 || a != D.power(a.size() / D.size()))
      throw Error("splitting functor: " + a.to_string() + " is not a power of " + D.to_string());
    std::size_t const n = a.size() / D.size();
    if (n > max_n)
      throw Error("splitting functor: power " + std::to_string(n) + " exceeds max_n " +
                  std::to_string(max_n));
    return n;
  };

  BasicFrobeniusFunctor<S> F;
  F.name = "split(" + D.to_string() + ")";
  F.kind = FunctorKind::Splitting;
  F.object_map = [splits, power_of](MatObject const& a) { return (*splits)[power_of(a)].image; };
  F.morphism_map = [splits, power_of](BasicMorphism<S> const& f) {
    auto const& from = (*splits)[power_of(f.dom())];
    auto const& to = (*splits)[power_of(f.cod())];
    return then(from.section, f, to.retraction);
  };
  F.phi = [splits, power_of](MatObject const& a, MatObject const& b) {
    std::size_t const n = power_of(a);
    std::size_t const m = power_of(b);
    auto const& whole = (*splits)[power_of(a * b)];
    return compose(whole.retraction, tensor((*splits)[n].section, (*splits)[m].section));
  };
  F.psi = [splits, power_of](MatObject const& a, MatObject const& b) {
    std::size_t const n = power_of(a);
    std::size_t const m = power_of(b);
    auto const& whole = (*splits)[power_of(a * b)];
    return compose(tensor((*splits)[n].retraction, (*splits)[m].retraction), whole.section);
  };
  F.phi0 = (*splits)[0].retraction;
  F.psi0 = (*splits)[0].section;
  return F;
}

}  // namespace froblab
