#include <doctest.h>

#include <random>

#include "centerpoint/errors.hpp"
#include "centerpoint/scalar.hpp"

using namespace centerpoint;

namespace {

// Schoolbook polynomial remainder over Z by a monic divisor.
std::vector<Integer> poly_rem(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dd = den.size() - 1;
  while (num.size() > dd) {
    const Integer lead = num.back();
    const std::size_t shift = num.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) num[shift + i] -= lead * den[i];
    num.pop_back();
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return num;
}

Scalar random_scalar(const FieldContext& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  switch (ctx.kind()) {
    case FieldKind::Rational: return ctx.from_rational(Rational(num(rng), den(rng)));
    case FieldKind::PrimeField: return Scalar::from_residue(ctx, rng() % ctx.modulus());
    case FieldKind::Cyclotomic: {
      std::vector<Rational> c(ctx.degree());
      for (auto& q : c) {
        q = Rational(num(rng), den(rng));
        q.canonicalize();
      }
      return Scalar::from_cyclotomic_coeffs(ctx, c);
    }
  }
  return ctx.zero();
}

}  // namespace

TEST_CASE("cyclotomic polynomials of small conductor") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<Integer>{1, 1, 1, 1, 1});
}

TEST_CASE("cyclotomic polynomial divides x^m - 1 with degree phi(m)") {
  for (int m = 1; m <= 60; ++m) {
    auto phi = cyclotomic_polynomial(m);
    CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(m));
    CHECK(phi.back() == 1);
    std::vector<Integer> xm(m + 1, 0);
    xm[0] = -1;
    xm[m] = 1;
    CHECK(poly_rem(xm, phi).empty());
  }
}

TEST_CASE("basic field arithmetic") {
  auto q = FieldContext::rationals();
  CHECK(field_arithmetic(q.parse_scalar("1/6"), q.parse_scalar("1/6"), ArithmeticOp::Add) ==
        q.parse_scalar("1/3"));
  auto f7 = FieldContext::prime_field(7);
  CHECK(field_arithmetic(f7.from_integer(3), f7.from_integer(5), ArithmeticOp::Mul) == f7.one());
  auto z4 = FieldContext::cyclotomic(4);
  CHECK(field_arithmetic(z4.zeta(), z4.zeta(), ArithmeticOp::Mul) == -z4.one());
  CHECK(z4.zeta(4) == z4.one());
  auto z3 = FieldContext::cyclotomic(3);
  CHECK(z3.one() + z3.zeta() + z3.zeta(2) == z3.zero());
}

TEST_CASE("field arithmetic errors") {
  auto q = FieldContext::rationals();
  CHECK_THROWS_AS(q.one() / q.zero(), DivisionByZero);
  CHECK_THROWS_AS(q.one() + FieldContext::prime_field(5).one(), ContextMismatch);
  CHECK_THROWS_AS(FieldContext::prime_field(9), UnsupportedParameter);
  CHECK_THROWS_AS(FieldContext::parse("R"), InputError);
  CHECK(FieldContext::parse("Qzeta:5") == FieldContext::cyclotomic(5));
  CHECK(FieldContext::parse("Fp:13") == FieldContext::prime_field(13));
}

TEST_CASE("rational reconstruction") {
  CHECK(inv_mod(2, 101) == 51);
  CHECK(rational_reconstruct(51, 101, 7) == Rational(1, 2));
  CHECK(rational_reconstruct(3, 101, 7) == Rational(3));
  const Integer r = 1009 - inv_mod(6, 1009);
  CHECK(r == 168);
  CHECK(rational_reconstruct(r, 1009, 20) == Rational(-1, 6));
  CHECK_THROWS_AS(rational_reconstruct(3, 101, 8), BoundTooLargeForModulus);
}

TEST_CASE("rational reconstruction round trip") {
  std::mt19937_64 rng(7);
  const std::uint64_t p = 1000003;
  const Integer bound = 700;
  std::uniform_int_distribution<int> num(-700, 700), den(1, 700);
  for (int i = 0; i < 1000; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    const auto back = rational_reconstruct(reduce_mod_p(q, p), Integer(static_cast<unsigned long>(p)), bound);
    REQUIRE(back.has_value());
    CHECK(*back == q);
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  const std::vector<FieldContext> contexts = {FieldContext::rationals(), FieldContext::prime_field(151),
                                              FieldContext::cyclotomic(5), FieldContext::cyclotomic(12)};
  for (const auto& ctx : contexts) {
    const int samples = ctx.kind() == FieldKind::Cyclotomic ? 2500 : 10000;
    for (int i = 0; i < samples; ++i) {
      const auto a = random_scalar(ctx, rng), b = random_scalar(ctx, rng), c = random_scalar(ctx, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == ctx.zero());
      if (!a.is_zero()) REQUIRE(a * a.inverse() == ctx.one());
    }
  }
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(151));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(1000003));
  CHECK(primitive_root(7) == 3);
  CHECK(euler_phi(12) == 4);
  CHECK(divisors(12) == std::vector<int>{1, 2, 3, 4, 6, 12});
  CHECK(reduce_mod_p(Rational(-1, 6), 1009) == 168);
  CHECK_THROWS_AS(reduce_mod_p(Rational(1, 7), 7), DivisionByZero);
}

TEST_CASE("canonical text forms") {
  auto q = FieldContext::rationals();
  CHECK(q.parse_scalar("-2/12").to_string() == "-1/6");
  CHECK(parse_rational("4/2") == 2);
  CHECK(rational_to_string(Rational(3)) == "3");
  auto z5 = FieldContext::cyclotomic(5);
  CHECK(z5.zeta(5) == z5.one());
  CHECK((z5.zeta() + z5.zeta(4)).is_algebraic_integer());
  CHECK_FALSE(z5.from_rational(Rational(1, 2)).is_algebraic_integer());
  CHECK(compare_canonical(q.from_integer(3), q.from_integer(-3)) == std::strong_ordering::greater);
}
