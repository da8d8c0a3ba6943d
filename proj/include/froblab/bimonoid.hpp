#pragma once

#include <froblab/algebra.hpp>
#include <froblab/functor.hpp>

#include <string>

namespace froblab {

/// A monoid and a comonoid on the same carrier.
template <Scalar S>
struct BasicBimonoidData {
  std::string name;
  MatObject carrier;
  BasicMorphism<S> mu;
  BasicMorphism<S> eta;
  BasicMorphism<S> delta;
  BasicMorphism<S> epsilon;
};

using BimonoidData = BasicBimonoidData<Rational>;

/// The group algebra Q[Z/n]: g h = g + h, delta g = g (x) g, epsilon g = 1.
inline BimonoidData group_bimonoid(std::size_t n, std::string label = "G") {
  if (n == 0) throw Error("group_bimonoid: n must be positive");
  MatObject const A = MatObject::single(std::move(label), n);
  Matrix delta(n * n, n);
  Matrix epsilon(1, n);
  Matrix eta(n, 1);
  for (std::size_t g = 0; g < n; ++g) {
    delta.set(g * n + g, g, 1);
    epsilon.set(0, g, 1);
  }
  eta.set(0, 0, 1);
  return {"Z/" + std::to_string(n), A, Morphism(A * A, A, multiplication_matrix(cyclic_group_constants(n))),
          Morphism(MatObject(), A, std::move(eta)), Morphism(A, A * A, std::move(delta)),
          Morphism(A, MatObject(), std::move(epsilon))};
}

namespace detail {

template <Scalar S>
void check_bimonoid_shapes(BasicBimonoidData<S> const& b) {
  std::size_t const n = b.carrier.dimension();
  auto shape = [&](BasicMorphism<S> const& f, std::size_t rows, std::size_t cols, char const* what) {
    if (f.matrix().rows() != rows || f.matrix().cols() != cols)
      throw ShapeError(std::string("bimonoid '") + b.name + "': " + what + " has the wrong shape");
  };
  shape(b.mu, n, n * n, "mu");
  shape(b.eta, n, 1, "eta");
  shape(b.delta, n * n, n, "delta");
  shape(b.epsilon, 1, n, "epsilon");
}

/// delta o mu = (mu (x) mu) o (1 (x) c (x) 1) o (delta (x) delta)
template <Scalar S>
void check_mult_comult(BasicLawReport<S>& report, BasicBimonoidData<S> const& b) {
  MatObject const& A = b.carrier;
  report.expect_equal("mult-comult", compose(b.delta, b.mu),
                      then(tensor(b.delta, b.delta), whisker(A, braiding<S>(A, A), A),
                           tensor(b.mu, b.mu)));
}

}  // namespace detail

/// Monoid and comonoid laws, multiplicativity of delta, and the weak unit
/// and counit chains. The braiding is symmetric, so c^-1 = c.
template <Scalar S>
BasicLawReport<S> check_weak_bimonoid(BasicBimonoidData<S> const& b, double tolerance = 1e-9) {
  detail::check_bimonoid_shapes(b);
  BasicLawReport<S> report(tolerance);
  MatObject const& A = b.carrier;
  check_monoid(report, A, b.mu, b.eta);
  check_comonoid(report, A, b.delta, b.epsilon);
  detail::check_mult_comult(report, b);

  auto const one = identity<S>(A);
  auto const c = whisker(A, braiding<S>(A, A), A);
  auto const eps2 = tensor(b.epsilon, b.epsilon);
  auto const counit = then(tensor(one, b.mu), b.mu, b.epsilon);
  auto const counit_plain = then(tensor(one, b.delta, one), tensor(b.mu, b.mu), eps2);
  auto const counit_braided = then(tensor(one, b.delta, one), c, tensor(b.mu, b.mu), eps2);
  report.expect_equal("weak-counit", counit, counit_plain);
  report.expect_equal("weak-counit-braided", counit, counit_braided);

  auto const eta2 = tensor(b.eta, b.eta);
  auto const unit = then(b.eta, b.delta, tensor(one, b.delta));
  auto const unit_plain = then(eta2, tensor(b.delta, b.delta), tensor(one, b.mu, one));
  auto const unit_braided = then(eta2, tensor(b.delta, b.delta), c, tensor(one, b.mu, one));
  report.expect_equal("weak-unit", unit, unit_plain);
  report.expect_equal("weak-unit-braided", unit, unit_braided);
  return report;
}

/// Monoid and comonoid laws, multiplicativity of delta and the three strict
/// unit/counit axioms.
template <Scalar S>
BasicLawReport<S> check_bimonoid(BasicBimonoidData<S> const& b, double tolerance = 1e-9) {
  detail::check_bimonoid_shapes(b);
  BasicLawReport<S> report(tolerance);
  MatObject const& A = b.carrier;
  check_monoid(report, A, b.mu, b.eta);
  check_comonoid(report, A, b.delta, b.epsilon);
  detail::check_mult_comult(report, b);
  report.expect_equal("comult-unit", compose(b.delta, b.eta), tensor(b.eta, b.eta));
  report.expect_equal("counit-mult", compose(b.epsilon, b.mu), tensor(b.epsilon, b.epsilon));
  report.expect_equal("counit-unit", compose(b.epsilon, b.eta), identity<S>(MatObject()));
  return report;
}

template <Scalar S>
BasicBimonoidData<S> conjugate_bimonoid(BasicFrobeniusFunctor<S> const& F,
                                        BasicBimonoidData<S> const& b) {
  MatObject const& A = b.carrier;
  return {b.name + "^" + F.name,
          F(A),
          conjugate_morphism(F, b.mu, {A, A}, {A}),
          conjugate_morphism(F, b.eta, {}, {A}),
          conjugate_morphism(F, b.delta, {A}, {A, A}),
          conjugate_morphism(F, b.epsilon, {A}, {})};
}

}  // namespace froblab
