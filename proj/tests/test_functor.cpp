#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace froblab;

namespace {

std::vector<FrobeniusAlgebraData> algebras() {
  return {complex_over_rationals(2, 0), complex_over_rationals(1, 3), dual_numbers(), matrix_algebra_frobenius(2),
          frobenius_from_form("Z/3", cyclic_group_constants(3), {3, 0, 0})};
}

}  // namespace

TEST_CASE("Frobenius algebra structure maps match the dual-basis construction", "[algebra]") {
  for (auto const& alg : algebras()) {
    INFO(alg.name);
    auto const o = oracle::from_library(alg);
    std::size_t const n = alg.carrier.dimension();
    CHECK(alg.delta.matrix() == oracle::to_matrix(oracle::comultiplication(o), n));
    auto const u = oracle::unit(o);
    for (std::size_t i = 0; i < n; ++i) CHECK(alg.eta.matrix()(i, 0) == u[i]);
    CHECK(check_frobenius_algebra(alg).all_passed());
  }
}

TEST_CASE("barbell values", "[algebra]") {
  // epsilon(1) read off the form: 2 for C(2,0), 0 for the dual numbers.
  auto const c = complex_over_rationals(2, 0);
  CHECK(compose(c.epsilon, c.eta).matrix() == Matrix::from_rows({{2}}));
  auto const d = dual_numbers();
  CHECK(compose(d.epsilon, d.eta).matrix().is_zero());
}

TEST_CASE("separability of the algebras", "[algebra]") {
  CHECK(check_frobenius_algebra(complex_over_rationals(2, 0), true).all_passed());
  CHECK(check_frobenius_algebra(matrix_algebra_frobenius(2), true).all_passed());
  auto const dual = check_frobenius_algebra(dual_numbers(), true);
  CHECK(dual.failures() == std::vector<std::string>{"separability"});
  CHECK_THROWS(complex_over_rationals(0, 0));
}

TEST_CASE("induced phi and psi match the index formulas", "[functor]") {
  for (auto const& alg : algebras()) {
    INFO(alg.name);
    auto const F = algebra_induced_functor(alg);
    auto const o = oracle::from_library(alg);
    for (auto [x, y] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {3, 2}}) {
      MatObject const X = MatObject::single("X", x), Y = MatObject::single("Y", y);
      std::size_t const n = o.dim();
      CHECK(F.phi(X, Y).matrix() == oracle::to_matrix(oracle::induced_phi(o, x, y), x * n * y * n));
      CHECK(F.psi(X, Y).matrix() == oracle::to_matrix(oracle::induced_psi(o, x, y), x * y * n));
    }
  }
}

TEST_CASE("functor law suites", "[functor]") {
  MatObject const A = MatObject::single("A", 2), B = MatObject::single("B", 3);
  std::vector<MatObject> const samples{MatObject(), A, B};
  for (auto const& alg : {complex_over_rationals(2, 0), matrix_algebra_frobenius(2)})
    CHECK(check_frobenius_functor(algebra_induced_functor(alg), samples).all_passed());
  auto const dual = check_frobenius_functor(algebra_induced_functor(dual_numbers()), samples);
  CHECK(dual.failures() == std::vector<std::string>{"separability"});
  CHECK(check_frobenius_functor(identity_functor<Rational>(), samples).all_passed());
  CHECK(check_frobenius_functor(strong_permutation_functor<Rational>(), samples).all_passed());
  CHECK(check_frobenius_functor(strong_twisted_functor<Rational>(), samples).all_passed());
}

TEST_CASE("n-ary phi after n-ary psi is the identity for separable functors", "[functor]") {
  MatObject const A = MatObject::single("A", 2);
  for (auto const& alg : {complex_over_rationals(2, 0), matrix_algebra_frobenius(2)}) {
    auto const F = algebra_induced_functor(alg);
    for (std::size_t n = 2; n <= 4; ++n) {
      std::vector<MatObject> const parts(n, A);
      CHECK(same_value(compose(nary_phi(F, parts), nary_psi(F, parts)), identity<Rational>(F(A.power(n)))));
    }
  }
}

TEST_CASE("conjugation of a morphism is psi F(f) phi", "[functor]") {
  Rng rng = trial_rng(31, 0, 0);
  MatObject const A = MatObject::single("A", 2), B = MatObject::single("B", 1);
  auto const alg = complex_over_rationals(2, 0);
  auto const F = algebra_induced_functor(alg);
  auto const o = oracle::from_library(alg);
  auto const f = random_morphism(rng, A * B, B * A);
  // F(f) = f (x) 1_C
  auto const Ff = oracle::kron(oracle::dense(f), oracle::eye(2));
  auto const expected = oracle::mul(oracle::induced_psi(o, 1, 2), oracle::mul(Ff, oracle::induced_phi(o, 2, 1)));
  CHECK(conjugate_morphism(F, f, {A, B}, {B, A}).matrix() == oracle::to_matrix(expected, 2 * 2 * 1 * 2));
}

TEST_CASE("composite functors stay Frobenius", "[functor]") {
  MatObject const A = MatObject::single("A", 2);
  auto const GF = composite_functor(algebra_induced_functor(complex_over_rationals(2, 0)),
                                    algebra_induced_functor(dual_numbers()));
  auto const r = check_frobenius_functor(GF, {MatObject(), A});
  CHECK(r.without("separability").all_passed());
}

TEST_CASE("strong functors and braidings", "[functor]") {
  std::vector<MatObject> const s{MatObject(), MatObject::single("A", 2), MatObject::single("E", 3)};
  CHECK(is_strong(strong_permutation_functor<Rational>(), s));
  CHECK(is_strong(strong_twisted_functor<Rational>(), s));
  CHECK_FALSE(is_strong(algebra_induced_functor(complex_over_rationals(2, 0)), s));
  CHECK(check_braided_functor(strong_permutation_functor<Rational>(), s).all_passed());
  CHECK_FALSE(check_braided_functor(strong_twisted_functor<Rational>(), s).all_passed());
  // The braiding sent through the functor is the swap on the image objects.
  auto const P = strong_permutation_functor<Rational>();
  MatObject const A = s[1], E = s[2];
  CHECK(conjugate_morphism(P, braiding<Rational>(A, E), {A, E}, {E, A}).matrix() ==
        oracle::to_matrix(oracle::swap(2, 3), 6));
}

TEST_CASE("invariance on the catalogue diagrams", "[functor][invariance]") {
  auto const Fc = algebra_induced_functor(complex_over_rationals(2, 0));
  auto const Fd = algebra_induced_functor(dual_numbers());
  auto const dual = catalog::algebra_labelling(dual_numbers());
  CHECK(verify_invariance(Fc, catalog::bubble(), dual).equal);
  CHECK_FALSE(verify_invariance(Fd, catalog::bubble(), dual).equal);
  CHECK(verify_invariance(Fd, catalog::barbell(), dual).equal);

  auto const t = catalog::terminal_labelling();
  auto const two = verify_invariance(Fc, catalog::barbells(2), t);
  CHECK(two.lhs.matrix() == Matrix::from_rows({{4}}));
  CHECK(two.rhs.matrix() == Matrix::from_rows({{2}}));
}

TEST_CASE("float backend agrees with the exact one", "[functor][float]") {
  auto const F = algebra_induced_functor(convert_algebra<double>(complex_over_rationals(2, 0)));
  for (std::uint64_t i = 0; i < 20; ++i) {
    Rng rng = trial_rng(5, 0, i);
    auto const r = random_connected_diagram(rng, DiagramGenConfig{}, false);
    CHECK(verify_invariance(F, r.diagram, convert_labelling<double>(r.labelling), 1e-6).equal);
  }
}
