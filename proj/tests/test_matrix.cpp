#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace froblab;

namespace {

Matrix random_dense_ish(Rng& rng, std::size_t r, std::size_t c) { return random_matrix(rng, r, c); }

}  // namespace

TEST_CASE("rationals parse in every accepted spelling", "[scalar]") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2/6") == Rational(-1, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("3e-2") == Rational(3, 100));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("-1.5E1") == Rational(-15));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("sparse storage never keeps zeros", "[matrix]") {
  Matrix m(2, 3);
  m.set(0, 1, 5);
  m.add(0, 1, -5);
  m.set(1, 2, 0);
  CHECK(m.nonzeros() == 0);
  CHECK(m == Matrix(2, 3));
  CHECK_THROWS_AS(m.set(2, 0, 1), ShapeError);
}

TEST_CASE("products and Kronecker products agree with direct summation", "[matrix]") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng = trial_rng(11, 0, t);
    std::size_t const n = 1 + uniform_index(rng, 5), k = 1 + uniform_index(rng, 5), m = 1 + uniform_index(rng, 5);
    auto const a = random_dense_ish(rng, n, k);
    auto const b = random_dense_ish(rng, k, m);
    CHECK(multiply(a, b) == oracle::to_matrix(oracle::mul(oracle::dense(a), oracle::dense(b), k), m));

    std::size_t const p = 1 + uniform_index(rng, 3), q = 1 + uniform_index(rng, 3);
    auto const c = random_dense_ish(rng, p, q);
    CHECK(kron(a, c) == oracle::to_matrix(oracle::kron(oracle::dense(a), oracle::dense(c), k, q), k * q));
    CHECK(transpose(a) == oracle::to_matrix(oracle::transpose(oracle::dense(a), k), n));
  }
}

TEST_CASE("apply_local equals the whiskered Kronecker product", "[matrix]") {
  Rng rng = trial_rng(12, 0, 0);
  for (int t = 0; t < 20; ++t) {
    std::size_t const l = 1 + uniform_index(rng, 3), r = 1 + uniform_index(rng, 3);
    std::size_t const fi = 1 + uniform_index(rng, 3), fo = 1 + uniform_index(rng, 3);
    auto const f = random_matrix(rng, fo, fi);
    auto const x = random_matrix(rng, l * fi * r, 2);
    auto const whole = oracle::kron(oracle::kron(oracle::eye(l), oracle::dense(f), l, fi), oracle::eye(r), l * fi, r);
    CHECK(apply_local(l, f, r, x) == oracle::to_matrix(oracle::mul(whole, oracle::dense(x), l * fi * r), 2));
  }
}

TEST_CASE("rank and inverse agree with Gaussian elimination", "[matrix]") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng = trial_rng(13, 0, t);
    std::size_t const n = 1 + uniform_index(rng, 5), m = 1 + uniform_index(rng, 5);
    auto const a = random_matrix(rng, n, m);
    CHECK(rank(a) == oracle::rank(oracle::dense(a)));

    auto const s = random_matrix(rng, n, n);
    auto const inv = inverse(s);
    auto const expected = oracle::inverse(oracle::dense(s));
    REQUIRE(inv.has_value() == expected.has_value());
    if (inv) CHECK(*inv == oracle::to_matrix(*expected, n));
  }
}

TEST_CASE("row reduction yields a factorization through the rank", "[matrix]") {
  for (std::uint64_t t = 0; t < 20; ++t) {
    Rng rng = trial_rng(14, 0, t);
    auto const a = random_matrix(rng, 4, 3);
    auto const b = random_matrix(rng, 3, 5);
    auto const m = multiply(a, b);
    auto const [c, r] = rank_factorization(m);
    CHECK(c.cols() == oracle::rank(oracle::dense(m)));
    CHECK(multiply(c, r) == m);
  }
}

TEST_CASE("solve returns a solution exactly when one exists", "[matrix]") {
  Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
  auto const consistent = solve(a, Matrix::from_rows({{3}, {6}}));
  REQUIRE(consistent);
  CHECK(multiply(a, *consistent) == Matrix::from_rows({{3}, {6}}));
  CHECK_FALSE(solve(a, Matrix::from_rows({{3}, {7}})));
}

TEST_CASE("floating matrices compare within tolerance", "[matrix][float]") {
  auto const a = convert_matrix<double>(Matrix::from_rows({{1, 0}, {0, 1}}));
  auto b = a;
  b.set(0, 1, 1e-12);
  CHECK(approx_equal(a, b, 1e-9));
  CHECK_FALSE(approx_equal(a, b, 1e-13));
  auto const inv = inverse(convert_matrix<double>(Matrix::from_rows({{2, 1}, {1, 1}})));
  REQUIRE(inv);
  CHECK(approx_equal(*inv, convert_matrix<double>(Matrix::from_rows({{1, -1}, {-1, 2}})), 1e-12));
}
