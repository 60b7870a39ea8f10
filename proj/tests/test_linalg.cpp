#include <doctest.h>

#include <random>

#include "centerpoint/linalg.hpp"

using namespace centerpoint;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, const FieldContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(r, c, ctx);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ctx.from_integer(d(rng));
  return m;
}

}  // namespace

TEST_CASE("inverse and determinant agree") {
  std::mt19937_64 rng(3);
  for (const auto& ctx : {FieldContext::rationals(), FieldContext::prime_field(151), FieldContext::cyclotomic(3)}) {
    for (int t = 0; t < 30; ++t) {
      auto m = random_matrix(5, 5, ctx, rng);
      auto inv = inverse(m);
      const auto det = determinant(m);
      CHECK(inv.has_value() == !det.is_zero());
      if (inv) {
        CHECK(m * *inv == Matrix::identity(5, ctx));
        CHECK(determinant(*inv) * det == ctx.one());
      }
    }
  }
}

TEST_CASE("rank nullity and solving") {
  std::mt19937_64 rng(5);
  auto q = FieldContext::rationals();
  for (int t = 0; t < 30; ++t) {
    auto a = random_matrix(4, 2, q, rng), b = random_matrix(2, 6, q, rng);
    auto m = a * b;
    const auto r = rank(m);
    CHECK(r <= 2);
    auto ns = nullspace(m);
    CHECK(ns.rows() + r == 6);
    CHECK((m * ns.transpose()).is_zero());
    std::vector<Scalar> x(6, q.zero());
    x[t % 6] = q.one();
    auto rhs = m.apply(x);
    auto sol = solve(m, rhs);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == rhs);
  }
  Matrix z(2, 2, q);
  z(0, 0) = q.one();
  CHECK_FALSE(solve(z, std::vector<Scalar>{q.zero(), q.one()}).has_value());
}

TEST_CASE("row space basis is canonical") {
  auto q = FieldContext::rationals();
  auto m = Matrix::from_rows({{q.from_integer(2), q.from_integer(4)}, {q.from_integer(1), q.from_integer(2)}}, q);
  auto b = row_space_basis(m);
  CHECK(b.rows() == 1);
  CHECK(b(0, 0) == q.one());
  CHECK(b(0, 1) == q.from_integer(2));
}
