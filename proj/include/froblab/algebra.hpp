#pragma once

#include <froblab/law_report.hpp>
#include <froblab/morphism.hpp>

#include <string>
#include <vector>

namespace froblab {

/// (C, mu, eta, delta, epsilon) in the matrix category.
template <Scalar S>
struct BasicFrobeniusAlgebra {
  std::string name;
  MatObject carrier;
  BasicMorphism<S> mu;       // C C -> C
  BasicMorphism<S> eta;      // I -> C
  BasicMorphism<S> delta;    // C -> C C
  BasicMorphism<S> epsilon;  // C -> I
};

using FrobeniusAlgebraData = BasicFrobeniusAlgebra<Rational>;

template <Scalar S>
BasicFrobeniusAlgebra<S> convert_algebra(FrobeniusAlgebraData const& a) {
  return {a.name, a.carrier, convert_morphism<S>(a.mu), convert_morphism<S>(a.eta),
          convert_morphism<S>(a.delta), convert_morphism<S>(a.epsilon)};
}

/// e_i e_j = sum_k constants[i][j][k] e_k
using StructureConstants = std::vector<std::vector<std::vector<Rational>>>;

namespace detail {

inline void check_constants(StructureConstants const& c, std::size_t n) {
  if (c.size() != n) throw ShapeError("structure constants: expected " + std::to_string(n) + " rows");
  for (auto const& row : c) {
    if (row.size() != n) throw ShapeError("structure constants: ragged row");
    for (auto const& v : row)
      if (v.size() != n) throw ShapeError("structure constants: product vector of wrong length");
  }
}

}  // namespace detail

/// Multiplication matrix C C -> C of a basis algebra.
inline Matrix multiplication_matrix(StructureConstants const& c) {
  std::size_t const n = c.size();
  detail::check_constants(c, n);
  Matrix mu(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) mu.set(k, i * n + j, c[i][j][k]);
  return mu;
}

/// The two-sided unit of a basis algebra, found by solving u e_j = e_j = e_j u.
inline Matrix unit_vector(StructureConstants const& c) {
  std::size_t const n = c.size();
  Matrix system(2 * n * n, n);
  Matrix rhs(2 * n * n, 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t const left = j * n + k;
      std::size_t const right = n * n + j * n + k;
      for (std::size_t i = 0; i < n; ++i) {
        system.set(left, i, c[i][j][k]);
        system.set(right, i, c[j][i][k]);
      }
      if (j == k) {
        rhs.set(left, 0, 1);
        rhs.set(right, 0, 1);
      }
    }
  }
  auto u = solve(system, rhs);
  if (!u) throw Error("algebra has no two-sided unit");
  return *u;
}

/// Frobenius algebra from structure constants and a Frobenius form. The
/// comultiplication is x -> sum_ij G_ij (x e_i) (x) e_j where G inverts the
/// pairing B_ij = form(e_i e_j), so the counit laws hold by construction.
inline FrobeniusAlgebraData frobenius_from_form(std::string name, StructureConstants const& c,
                                                std::vector<Rational> const& form,
                                                std::string carrier_label = "C") {
  std::size_t const n = c.size();
  detail::check_constants(c, n);
  if (form.size() != n) throw ShapeError("form has " + std::to_string(form.size()) + " coefficients, expected " + std::to_string(n));
  MatObject const C = MatObject::single(std::move(carrier_label), n);

  Matrix pairing(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) pairing.add(i, j, form[k] * c[i][j][k]);
  auto copairing = inverse(pairing);
  if (!copairing) throw Error("form on '" + name + "' is degenerate");

  Matrix delta(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational const& g = (*copairing)(i, j);
        if (sgn(g) == 0) continue;
        for (std::size_t m = 0; m < n; ++m) delta.add(m * n + j, k, g * c[k][i][m]);
      }

  Matrix epsilon(1, n);
  for (std::size_t k = 0; k < n; ++k) epsilon.set(0, k, form[k]);

  return {std::move(name), C, Morphism(C * C, C, multiplication_matrix(c)),
          Morphism(MatObject(), C, unit_vector(c)), Morphism(C, C * C, std::move(delta)),
          Morphism(C, MatObject(), std::move(epsilon))};
}

/// Q(i) over Q with basis (1, i) and form x + iy -> a x + b y.
inline FrobeniusAlgebraData complex_over_rationals(Rational const& a, Rational const& b) {
  if (sgn(a) == 0 && sgn(b) == 0) throw Error("complex_over_rationals: form (0,0) is degenerate");
  StructureConstants c = {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}};
  return frobenius_from_form("complex(" + a.get_str() + "," + b.get_str() + ")", c, {a, b});
}

/// Q[x]/(x^2) with basis (1, x) and form a + bx -> b.
inline FrobeniusAlgebraData dual_numbers() {
  StructureConstants c = {{{1, 0}, {0, 1}}, {{0, 1}, {0, 0}}};
  return frobenius_from_form("dual-numbers", c, {0, 1});
}

/// n x n matrices with basis E_ij (index i n + j) and form n * trace.
inline FrobeniusAlgebraData matrix_algebra_frobenius(std::size_t n) {
  if (n == 0) throw Error("matrix_algebra_frobenius: n must be positive");
  std::size_t const d = n * n;
  StructureConstants c(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) c[i * n + j][j * n + l][i * n + l] = 1;
  std::vector<Rational> form(d);
  for (std::size_t i = 0; i < n; ++i) form[i * n + i] = Rational(static_cast<long>(n));
  return frobenius_from_form("matrix(" + std::to_string(n) + ")", c, form);
}

/// Structure constants of the group algebra Q[Z/n].
inline StructureConstants cyclic_group_constants(std::size_t n) {
  StructureConstants c(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j][(i + j) % n] = 1;
  return c;
}

template <Scalar S>
void check_monoid(BasicLawReport<S>& report, MatObject const& A, BasicMorphism<S> const& mu,
                  BasicMorphism<S> const& eta) {
  auto const one = identity<S>(A);
  report.expect_equal("associativity", compose(mu, tensor(mu, one)), compose(mu, tensor(one, mu)));
  report.expect_equal("left-unit", compose(mu, tensor(eta, one)), one);
  report.expect_equal("right-unit", compose(mu, tensor(one, eta)), one);
}

template <Scalar S>
void check_comonoid(BasicLawReport<S>& report, MatObject const& A, BasicMorphism<S> const& delta,
                    BasicMorphism<S> const& epsilon) {
  auto const one = identity<S>(A);
  report.expect_equal("coassociativity", compose(tensor(delta, one), delta),
                      compose(tensor(one, delta), delta));
  report.expect_equal("left-counit", compose(tensor(epsilon, one), delta), one);
  report.expect_equal("right-counit", compose(tensor(one, epsilon), delta), one);
}

/// mu o delta; the algebra is separable iff this is the identity.
template <Scalar S>
BasicMorphism<S> separability_defect(BasicFrobeniusAlgebra<S> const& alg) {
  return compose(alg.mu, alg.delta);
}

/// Monoid, comonoid and both Frobenius compatibility laws; optionally
/// separability as its own entry.
template <Scalar S>
BasicLawReport<S> check_frobenius_algebra(BasicFrobeniusAlgebra<S> const& alg,
                                          bool include_separability = false,
                                          double tolerance = 1e-9) {
  auto const& C = alg.carrier;
  std::size_t const n = C.dimension();
  auto shape = [&](BasicMorphism<S> const& f, std::size_t rows, std::size_t cols, char const* what) {
    if (f.matrix().rows() != rows || f.matrix().cols() != cols)
      throw ShapeError(std::string("algebra '") + alg.name + "': " + what + " has the wrong shape");
  };
  shape(alg.mu, n, n * n, "mu");
  shape(alg.eta, n, 1, "eta");
  shape(alg.delta, n * n, n, "delta");
  shape(alg.epsilon, 1, n, "epsilon");

  BasicLawReport<S> report(tolerance);
  check_monoid(report, C, alg.mu, alg.eta);
  check_comonoid(report, C, alg.delta, alg.epsilon);
  auto const one = identity<S>(C);
  auto const middle = compose(alg.delta, alg.mu);
  report.expect_equal("frobenius-left", compose(tensor(alg.mu, one), tensor(one, alg.delta)), middle);
  report.expect_equal("frobenius-right", compose(tensor(one, alg.mu), tensor(alg.delta, one)), middle);
  if (include_separability)
    report.expect_equal("separability", separability_defect(alg), one);
  return report;
}

}  // namespace froblab
