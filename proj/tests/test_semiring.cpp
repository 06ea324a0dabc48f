#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tropic/linalg.hpp"

using namespace tropic;

namespace {

const Scalar bot = Scalar::bottom();

std::mt19937 rng(20240811);

Scalar random_scalar(int lo = -9, int hi = 9, int bottom_weight = 3) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (pick(rng) < bottom_weight) return Scalar::bottom();
  std::uniform_int_distribution<int> val(lo, hi);
  return Scalar(val(rng));
}

Matrix random_matrix(std::size_t r, std::size_t c) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar();
  return m;
}

// independent naive evaluator for the matrix product
Matrix naive_matmul(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::bottom();
      for (std::size_t k = 0; k < a.cols(); ++k) {
        Scalar term = a(i, k) * b(k, j);
        if (acc < term) acc = term;
      }
      out(i, j) = acc;
    }
  return out;
}

}  // namespace

TEST_CASE("scalar laws: bottom is neutral for + and absorbing for *") {
  for (int v = -5; v <= 5; ++v) {
    Scalar x(v);
    CHECK(bot + x == x);
    CHECK(x + bot == x);
    CHECK((bot * x).is_bottom());
    CHECK((x * bot).is_bottom());
  }
  CHECK((bot + bot).is_bottom());
}

TEST_CASE("scalar ordering: bottom below every finite value") {
  CHECK(bot < Scalar(-1000));
  CHECK(Scalar(Rat(1, 3)) < Scalar(Rat(1, 2)));
  CHECK_FALSE(bot < bot);
}

TEST_CASE("semiring axioms on random samples") {
  for (int it = 0; it < 10000; ++it) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("tropical identity matrix is neutral") {
  Matrix id{{Scalar(0), bot}, {bot, Scalar(0)}};
  for (int it = 0; it < 20; ++it) {
    Matrix m = random_matrix(2, 2);
    CHECK(trop_matmul(id, m) == m);
    CHECK(trop_matmul(m, id) == m);
  }
}

TEST_CASE("first row of the 6x3 example against the all-zero vector") {
  Vector row{Scalar(-3), Scalar(0), Scalar(0)};
  Vector zero{Scalar(0), Scalar(0), Scalar(0)};
  CHECK(trop_dot(row, zero) == Scalar(0));
}

TEST_CASE("matmul agrees with the naive triple loop on random matrices") {
  for (int it = 0; it < 50; ++it) {
    Matrix a = random_matrix(3, 3), b = random_matrix(3, 3);
    CHECK(trop_matmul(a, b) == naive_matmul(a, b));
  }
}

TEST_CASE("matmul is associative on random conformable triples") {
  for (int it = 0; it < 30; ++it) {
    Matrix a = random_matrix(2, 3), b = random_matrix(3, 2), c = random_matrix(2, 4);
    CHECK(trop_matmul(trop_matmul(a, b), c) == trop_matmul(a, trop_matmul(b, c)));
  }
}

TEST_CASE("matmul rejects mismatched shapes") {
  Matrix a = random_matrix(2, 3), b = random_matrix(2, 3);
  CHECK_THROWS_AS(trop_matmul(a, b), std::invalid_argument);
}

TEST_CASE("dot: bottom absorbs, example value, random loop agreement") {
  CHECK(trop_dot(Vector{bot, bot}, Vector{Scalar(5), Scalar(7)}).is_bottom());
  CHECK(trop_dot(Vector{Scalar(0), Scalar(0), bot},
                 Vector{Scalar(0), Scalar(0), Scalar(0)}) == Scalar(0));
  CHECK_THROWS_AS(trop_dot(Vector{bot}, Vector{bot, bot}), std::invalid_argument);
  for (int it = 0; it < 100; ++it) {
    Vector x(4), y(4);
    for (std::size_t i = 0; i < 4; ++i) {
      x[i] = random_scalar();
      y[i] = random_scalar();
    }
    Scalar expect = Scalar::bottom();
    for (std::size_t i = 0; i < 4; ++i)
      if (x[i].is_finite() && y[i].is_finite()) {
        Scalar t(Rat(x[i].rat() + y[i].rat()));
        if (expect < t) expect = t;
      }
    CHECK(trop_dot(x, y) == expect);
  }
}

TEST_CASE("scalar_mul: identity, shift, bottom lambda") {
  Vector x{Scalar(0), Scalar(1)};
  CHECK(scalar_mul(Scalar(0), x) == x);
  CHECK(scalar_mul(Scalar(-1), x) == Vector{Scalar(-1), Scalar(0)});
  CHECK(scalar_mul(bot, x).is_bottom());
}

TEST_CASE("tropical proportionality of cyclic rows") {
  Vector u{Scalar(0), Scalar(3), Scalar(6), Scalar(9)};
  Vector v{Scalar(-3), Scalar(0), Scalar(3), Scalar(6)};
  CHECK(proportional(u, v));
  CHECK_FALSE(proportional(u, Vector{Scalar(0), Scalar(3), Scalar(6), Scalar(8)}));
  CHECK_FALSE(proportional(u, Vector{Scalar(0), Scalar(3), bot, Scalar(9)}));
}

TEST_CASE("text round trip is exact") {
  for (int it = 0; it < 200; ++it) {
    Scalar s = random_scalar(-50, 50);
    if (it % 3 == 0) s = Scalar(Rat(it - 100, 7));
    auto back = Scalar::parse(s.str());
    REQUIRE(back.has_value());
    CHECK(*back == s);
  }
  CHECK_FALSE(Scalar::parse("1.5").has_value());
  CHECK_FALSE(Scalar::parse("inf").has_value());
  CHECK_FALSE(Scalar::parse("3/0").has_value());
}
