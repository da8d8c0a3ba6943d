#pragma once

#include <froblab/functor.hpp>
#include <froblab/law_report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace froblab {

/// Lax YB operator on a finite family of carriers T_0 .. T_{k-1}:
/// y[i][j]: T_i T_j -> T_j T_i. A single carrier is the object form.
template <Scalar S>
struct BasicLaxYBData {
  std::vector<MatObject> carriers;
  std::vector<std::vector<BasicMorphism<S>>> y;

  static BasicLaxYBData on_object(MatObject a, BasicMorphism<S> op) {
    return {{std::move(a)}, {{std::move(op)}}};
  }

  std::size_t size() const noexcept { return carriers.size(); }
  BasicMorphism<S> const& at(std::size_t i, std::size_t j) const { return y.at(i).at(j); }
};

using LaxYBData = BasicLaxYBData<Rational>;

/// Idempotent nabla on D D with y, y' relatively inverse to each other.
template <Scalar S>
struct BasicWeakYBData {
  MatObject carrier;
  BasicMorphism<S> nabla;
  BasicMorphism<S> y;
  BasicMorphism<S> y_prime;
};

using WeakYBData = BasicWeakYBData<Rational>;

template <Scalar S>
std::optional<BasicMorphism<S>> inverse_morphism(BasicMorphism<S> const& f, double tolerance = 1e-9) {
  if (f.dom().dimension() != f.cod().dimension()) return std::nullopt;
  auto inv = inverse(f.matrix(), tolerance * 1e-3);
  if (!inv) return std::nullopt;
  return BasicMorphism<S>(f.cod(), f.dom(), std::move(*inv));
}

namespace detail {

template <Scalar S>
void check_yb_shapes(BasicLaxYBData<S> const& d) {
  if (d.carriers.empty()) throw ShapeError("YB data has no carriers");
  if (d.y.size() != d.size()) throw ShapeError("YB data: component table has the wrong size");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.y[i].size() != d.size()) throw ShapeError("YB data: ragged component table");
    for (std::size_t j = 0; j < d.size(); ++j) {
      auto const& f = d.y[i][j];
      if (f.dom().dimension() != (d.carriers[i] * d.carriers[j]).dimension() ||
          f.cod().dimension() != (d.carriers[j] * d.carriers[i]).dimension())
        throw ShapeError("YB component (" + std::to_string(i) + "," + std::to_string(j) +
                         ") has the wrong shape");
    }
  }
}

/// Both sides of the hexagon for y on T_a T_b T_c -> T_c T_b T_a.
template <Scalar S>
std::pair<BasicMorphism<S>, BasicMorphism<S>> hexagon_sides(BasicLaxYBData<S> const& d,
                                                            std::size_t a, std::size_t b,
                                                            std::size_t c) {
  auto const& A = d.carriers[a];
  auto const& B = d.carriers[b];
  auto const& C = d.carriers[c];
  auto y = [&](std::size_t i, std::size_t j) {
    return d.at(i, j).retyped(d.carriers[i] * d.carriers[j], d.carriers[j] * d.carriers[i]);
  };
  auto lhs = then(whisker(MatObject(), y(a, b), C), whisker(B, y(a, c), MatObject()),
                  whisker(MatObject(), y(b, c), A));
  auto rhs = then(whisker(A, y(b, c), MatObject()), whisker(MatObject(), y(a, c), B),
                  whisker(C, y(a, b), MatObject()));
  return {lhs, rhs};
}

inline std::string triple_context(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace detail

template <Scalar S>
BasicLawReport<S> check_lax_yb(BasicLaxYBData<S> const& d, double tolerance = 1e-9) {
  detail::check_yb_shapes(d);
  BasicLawReport<S> report(tolerance);
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      for (std::size_t c = 0; c < d.size(); ++c) {
        auto [lhs, rhs] = detail::hexagon_sides(d, a, b, c);
        report.expect_equal("hexagon", lhs, rhs, detail::triple_context(a, b, c));
      }
  return report;
}

template <Scalar S>
BasicLawReport<S> check_yb(BasicLaxYBData<S> const& d, double tolerance = 1e-9) {
  auto report = check_lax_yb(d, tolerance);
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      report.expect("invertible", inverse_morphism(d.at(i, j), tolerance).has_value(),
                    "(" + std::to_string(i) + "," + std::to_string(j) + ")", d.at(i, j));
  return report;
}

template <Scalar S>
BasicLawReport<S> check_weak_yb(BasicWeakYBData<S> const& w, double tolerance = 1e-9) {
  MatObject const D = w.carrier;
  MatObject const DD = D * D;
  for (auto const* f : {&w.nabla, &w.y, &w.y_prime})
    if (f->dom().dimension() != DD.dimension() || f->cod().dimension() != DD.dimension())
      throw ShapeError("weak YB data: components must be endomorphisms of " + DD.to_string());
  if (!is_idempotent(w.nabla, tolerance)) throw Error("weak YB data: nabla is not idempotent");

  auto const nabla = w.nabla.retyped(DD, DD);
  auto const y = w.y.retyped(DD, DD);
  auto const yp = w.y_prime.retyped(DD, DD);
  auto const one = identity<S>(D);

  BasicLawReport<S> report(tolerance);
  report.expect_equal("absorb-y-left", compose(nabla, y), y);
  report.expect_equal("absorb-y-right", compose(y, nabla), y);
  report.expect_equal("absorb-y-prime-left", compose(nabla, yp), yp);
  report.expect_equal("absorb-y-prime-right", compose(yp, nabla), yp);
  report.expect_equal("relative-inverse-left", compose(y, yp), nabla);
  report.expect_equal("relative-inverse-right", compose(yp, y), nabla);
  report.expect_equal("nabla-interchange", compose(tensor(one, nabla), tensor(nabla, one)),
                      compose(tensor(nabla, one), tensor(one, nabla)));
  report.expect_equal("nabla-slide-left", compose(tensor(one, y), tensor(nabla, one)),
                      compose(tensor(nabla, one), tensor(one, y)));
  report.expect_equal("nabla-slide-right", compose(tensor(one, nabla), tensor(y, one)),
                      compose(tensor(y, one), tensor(one, nabla)));
  report.merge(check_lax_yb(BasicLaxYBData<S>::on_object(D, y), tolerance), "y-");
  report.merge(check_lax_yb(BasicLaxYBData<S>::on_object(D, yp), tolerance), "y-prime-");
  return report;
}

/// Genuine YB operator viewed as a weak one with nabla = 1.
template <Scalar S>
BasicWeakYBData<S> weak_from_yb(MatObject const& a, BasicMorphism<S> const& y,
                                double tolerance = 1e-9) {
  auto inv = inverse_morphism(y, tolerance);
  if (!inv) throw Error("weak_from_yb: operator is not invertible");
  return {a, identity<S>(a * a), y, *inv};
}

/// y^F componentwise on the carriers F T_i.
template <Scalar S>
BasicLaxYBData<S> conjugate_yb(BasicFrobeniusFunctor<S> const& F, BasicLaxYBData<S> const& d) {
  detail::check_yb_shapes(d);
  BasicLaxYBData<S> r;
  for (auto const& t : d.carriers) r.carriers.push_back(F(t));
  r.y.resize(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      r.y[i].push_back(conjugate_morphism(F, d.at(i, j), {d.carriers[i], d.carriers[j]},
                                          {d.carriers[j], d.carriers[i]}));
  return r;
}

template <Scalar S>
BasicWeakYBData<S> conjugate_weak_yb(BasicFrobeniusFunctor<S> const& F, BasicWeakYBData<S> const& w) {
  std::vector<MatObject> const parts{w.carrier, w.carrier};
  return {F(w.carrier), conjugate_morphism(F, w.nabla, parts, parts),
          conjugate_morphism(F, w.y, parts, parts), conjugate_morphism(F, w.y_prime, parts, parts)};
}

/// (F D, psi phi, y^F, (y^-1)^F) for a YB operator y on D. F must pass the
/// separable Frobenius laws on {I, D}.
template <Scalar S>
BasicWeakYBData<S> weak_yb_from_conjugate(BasicFrobeniusFunctor<S> const& F,
                                          BasicLaxYBData<S> const& d, double tolerance = 1e-9) {
  if (d.size() != 1) throw Error("weak_yb_from_conjugate: expected a YB operator on one object");
  MatObject const& D = d.carriers.front();
  auto const laws = check_frobenius_functor(F, {MatObject(), D}, tolerance);
  if (!laws.all_passed())
    throw LawError("functor '" + F.name + "' is not separable Frobenius on " + D.to_string(),
                   laws.failures());
  auto const yb = check_yb(d, tolerance);
  if (!yb.all_passed()) throw LawError("operator is not a YB operator", yb.failures());

  auto const y = d.at(0, 0).retyped(D * D, D * D);
  auto const y_inv = *inverse_morphism(y, tolerance);
  std::vector<MatObject> const parts{D, D};
  return {F(D), compose(F.psi(D, D), F.phi(D, D)), conjugate_morphism(F, y, parts, parts),
          conjugate_morphism(F, y_inv, parts, parts)};
}

/// The q-deformed R-matrix of GL(2) on a 2-dimensional object.
inline Morphism q_r_matrix(MatObject const& a, Rational const& q) {
  if (a.dimension() != 2) throw ShapeError("q_r_matrix: object must have dimension 2");
  if (sgn(q) == 0) throw Error("q_r_matrix: q must be nonzero");
  Matrix m(4, 4);
  m.set(0, 0, q);
  m.set(1, 2, 1);
  m.set(2, 1, 1);
  m.set(2, 2, q - 1 / q);
  m.set(3, 3, q);
  return {a * a, a * a, std::move(m)};
}

/// c o (g (x) g): a lax YB operator for any endomorphism g; also a family
/// version c_{T_i,T_j} o (g_i (x) g_j).
template <Scalar S>
BasicLaxYBData<S> twisted_braiding_family(std::vector<BasicMorphism<S>> const& g) {
  BasicLaxYBData<S> d;
  for (auto const& gi : g) d.carriers.push_back(gi.dom());
  d.y.resize(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      d.y[i].push_back(compose(braiding<S>(g[i].dom(), g[j].dom()), tensor(g[i], g[j])));
  return d;
}

/// c_{T_i,T_j} on every pair of carriers.
template <Scalar S>
BasicLaxYBData<S> braiding_family(std::vector<MatObject> const& carriers) {
  BasicLaxYBData<S> d;
  d.carriers = carriers;
  d.y.resize(carriers.size());
  for (std::size_t i = 0; i < carriers.size(); ++i)
    for (std::size_t j = 0; j < carriers.size(); ++j)
      d.y[i].push_back(braiding<S>(carriers[i], carriers[j]));
  return d;
}

}  // namespace froblab
