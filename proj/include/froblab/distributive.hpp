#pragma once

#include <froblab/algebra.hpp>
#include <froblab/functor.hpp>

#include <string>

namespace froblab {

template <Scalar S>
struct BasicMonoidData {
  MatObject carrier;
  BasicMorphism<S> mu;
  BasicMorphism<S> eta;
};

using MonoidData = BasicMonoidData<Rational>;

/// Monoids A, B and lambda: A B -> B A.
template <Scalar S>
struct BasicDistLawData {
  BasicMonoidData<S> a;
  BasicMonoidData<S> b;
  BasicMorphism<S> lambda;
};

using DistLawData = BasicDistLawData<Rational>;

template <Scalar S>
BasicLawReport<S> check_monoid(BasicMonoidData<S> const& m, double tolerance = 1e-9) {
  BasicLawReport<S> report(tolerance);
  check_monoid(report, m.carrier, m.mu, m.eta);
  return report;
}

template <Scalar S>
BasicMonoidData<S> monoid_of(BasicFrobeniusAlgebra<S> const& alg) {
  return {alg.carrier, alg.mu, alg.eta};
}

/// The basis algebra with the given structure constants as a monoid.
inline MonoidData monoid_from_constants(StructureConstants const& c, std::string const& label) {
  MatObject const A = MatObject::single(label, c.size());
  return {A, Morphism(A * A, A, multiplication_matrix(c)), Morphism(MatObject(), A, unit_vector(c))};
}

namespace detail {

template <Scalar S>
void check_distlaw_shapes(BasicDistLawData<S> const& d) {
  auto const A = d.a.carrier.dimension();
  auto const B = d.b.carrier.dimension();
  if (d.lambda.dom().dimension() != A * B || d.lambda.cod().dimension() != A * B)
    throw ShapeError("distributive law: lambda must map A B -> B A");
  if (d.a.mu.matrix().rows() != A || d.a.mu.matrix().cols() != A * A ||
      d.b.mu.matrix().rows() != B || d.b.mu.matrix().cols() != B * B ||
      d.a.eta.matrix().rows() != A || d.b.eta.matrix().rows() != B)
    throw ShapeError("distributive law: monoid structure has the wrong shape");
}

/// Both multiplication pentagons.
template <Scalar S>
void check_distlaw_multiplication(BasicLawReport<S>& report, BasicDistLawData<S> const& d) {
  MatObject const& A = d.a.carrier;
  MatObject const& B = d.b.carrier;
  auto const lambda = d.lambda.retyped(A * B, B * A);
  auto const one_a = identity<S>(A);
  auto const one_b = identity<S>(B);
  report.expect_equal("mult-left", compose(lambda, tensor(d.a.mu, one_b)),
                      then(tensor(one_a, lambda), tensor(lambda, one_a), tensor(one_b, d.a.mu)));
  report.expect_equal("mult-right", compose(lambda, tensor(one_a, d.b.mu)),
                      then(tensor(lambda, one_b), tensor(one_b, lambda), tensor(d.b.mu, one_a)));
}

}  // namespace detail

/// Multiplication pentagons and both unit equations; monoid laws of A and
/// B are included with prefixes "A-" and "B-".
template <Scalar S>
BasicLawReport<S> check_distributive_law(BasicDistLawData<S> const& d, double tolerance = 1e-9) {
  detail::check_distlaw_shapes(d);
  BasicLawReport<S> report(tolerance);
  report.merge(check_monoid(d.a, tolerance), "A-");
  report.merge(check_monoid(d.b, tolerance), "B-");
  detail::check_distlaw_multiplication(report, d);
  MatObject const& A = d.a.carrier;
  MatObject const& B = d.b.carrier;
  auto const lambda = d.lambda.retyped(A * B, B * A);
  report.expect_equal("unit-left", compose(lambda, tensor(d.a.eta, identity<S>(B))),
                      tensor(identity<S>(B), d.a.eta));
  report.expect_equal("unit-right", compose(lambda, tensor(identity<S>(A), d.b.eta)),
                      tensor(d.b.eta, identity<S>(A)));
  return report;
}

/// As check_distributive_law with the unit equations replaced by the single
/// mixed equation on B A.
template <Scalar S>
BasicLawReport<S> check_weak_distributive_law(BasicDistLawData<S> const& d,
                                              double tolerance = 1e-9) {
  detail::check_distlaw_shapes(d);
  BasicLawReport<S> report(tolerance);
  report.merge(check_monoid(d.a, tolerance), "A-");
  report.merge(check_monoid(d.b, tolerance), "B-");
  detail::check_distlaw_multiplication(report, d);
  MatObject const& A = d.a.carrier;
  MatObject const& B = d.b.carrier;
  auto const lambda = d.lambda.retyped(A * B, B * A);
  auto const one_a = identity<S>(A);
  auto const one_b = identity<S>(B);
  report.expect_equal(
      "weak-unit",
      then(tensor(d.a.eta, one_b, one_a), tensor(lambda, one_a), tensor(one_b, d.a.mu)),
      then(tensor(one_b, one_a, d.b.eta), tensor(one_b, lambda), tensor(d.b.mu, one_a)));
  return report;
}

/// The monoid on B A with multiplication (mu (x) mu) o (1 (x) lambda (x) 1)
/// and unit eta (x) eta.
template <Scalar S>
BasicMonoidData<S> monoid_from_distributive_law(BasicDistLawData<S> const& d,
                                                double tolerance = 1e-9) {
  auto const report = check_distributive_law(d, tolerance);
  if (!report.all_passed()) throw LawError("not a distributive law", report.failures());
  MatObject const& A = d.a.carrier;
  MatObject const& B = d.b.carrier;
  auto const lambda = d.lambda.retyped(A * B, B * A);
  auto mu = compose(tensor(d.b.mu, d.a.mu), whisker(B, lambda, A));
  return {B * A, mu.retyped(B * A * B * A, B * A), tensor(d.b.eta, d.a.eta)};
}

template <Scalar S>
BasicMonoidData<S> conjugate_monoid(BasicFrobeniusFunctor<S> const& F, BasicMonoidData<S> const& m) {
  MatObject const& A = m.carrier;
  return {F(A), conjugate_morphism(F, m.mu, {A, A}, {A}), conjugate_morphism(F, m.eta, {}, {A})};
}

template <Scalar S>
BasicDistLawData<S> conjugate_distributive_law(BasicFrobeniusFunctor<S> const& F,
                                               BasicDistLawData<S> const& d) {
  MatObject const& A = d.a.carrier;
  MatObject const& B = d.b.carrier;
  return {conjugate_monoid(F, d.a), conjugate_monoid(F, d.b),
          conjugate_morphism(F, d.lambda, {A, B}, {B, A})};
}

}  // namespace froblab
