#include <doctest.h>

#include <random>

#include "centerpoint/class_algebra.hpp"

using namespace centerpoint;

namespace {

// Coefficient of e_z in (class-sum l)(class-sum m) for a fixed z in class n.
long long brute_constant(const GroupTable& g, const ClassPartition& p, std::size_t l, std::size_t m, std::size_t n) {
  const int z = p.representative(static_cast<int>(n));
  long long count = 0;
  for (int a : p.classes[l])
    for (int b : p.classes[m])
      if (g.mul(a, b) == z) ++count;
  return count;
}

std::vector<Scalar> random_central(std::size_t r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < r; ++i) v.push_back(FieldContext::rationals().from_integer(d(rng)));
  return v;
}

}  // namespace

TEST_CASE("structure constants match brute-force class products") {
  for (auto name : {"S3", "S4", "A4", "D4", "D5", "D6", "Q8", "C2xC2", "C6", "A5"}) {
    auto g = builtin_group_by_name(name);
    auto alg = structure_constants(g);
    const auto& p = alg.partition();
    for (std::size_t l = 0; l < alg.rank(); ++l)
      for (std::size_t m = 0; m < alg.rank(); ++m) {
        long long weighted = 0;
        for (std::size_t n = 0; n < alg.rank(); ++n) {
          CHECK_MESSAGE(alg.c(l, m, n) == brute_constant(g, p, l, m, n), name);
          CHECK(alg.c(l, m, n) == alg.c(m, l, n));
          weighted += alg.c(l, m, n) * static_cast<long long>(p.sizes[n]);
        }
        CHECK(weighted == static_cast<long long>(p.sizes[l] * p.sizes[m]));
        CHECK(alg.c(0, m, l) == (l == m ? 1 : 0));
      }
  }
}

TEST_CASE("relations of the small examples") {
  auto s3 = structure_constants(builtin_group_by_name("S3"));
  CHECK(relation_strings(s3) == std::vector<std::string>{"α² = 3 + 3β", "αβ = 2α", "β² = 2 + β"});

  auto s4 = structure_constants(builtin_group_by_name("S4"));
  CHECK(relation_strings(s4) ==
        std::vector<std::string>{"α² = 6 + 3β + 2δ", "αβ = 4α + 4γ", "αγ = 3β + 4δ", "αδ = α + 2γ", "β² = 8 + 4β + 8δ",
                                 "βγ = 4α + 4γ", "βδ = 3β", "γ² = 6 + 3β + 2δ", "γδ = 2α + γ", "δ² = 3 + 2δ"});

  auto q8 = structure_constants(builtin_group_by_name("Q8"));
  CHECK(relation_strings(q8) == std::vector<std::string>{"α² = 1", "αβ = β", "αγ = γ", "αδ = δ", "β² = 2 + 2α",
                                                         "βγ = 2δ", "βδ = 2γ", "γ² = 2 + 2α", "γδ = 2β",
                                                         "δ² = 2 + 2α"});
}

TEST_CASE("class symbols") {
  CHECK(class_symbol(0) == "1");
  CHECK(class_symbol(1) == "α");
  CHECK(class_symbol(4) == "δ");
  CHECK(class_symbol(40) == "c40");
}

TEST_CASE("multiplication is commutative, associative and unital") {
  std::mt19937_64 rng(11);
  for (auto name : {"S4", "D5", "A5"}) {
    auto alg = structure_constants(builtin_group_by_name(name));
    const auto q = FieldContext::rationals();
    for (int t = 0; t < 20; ++t) {
      auto x = random_central(alg.rank(), rng), y = random_central(alg.rank(), rng),
           z = random_central(alg.rank(), rng);
      CHECK(alg.multiply(x, y) == alg.multiply(y, x));
      CHECK(alg.multiply(alg.multiply(x, y), z) == alg.multiply(x, alg.multiply(y, z)));
      CHECK(alg.multiply(alg.unit(q), x) == x);
    }
  }
}

TEST_CASE("mult_matrix agrees with multiply") {
  std::mt19937_64 rng(13);
  auto alg = structure_constants(builtin_group_by_name("S4"));
  const auto q = FieldContext::rationals();
  for (std::size_t l = 0; l < alg.rank(); ++l) {
    auto m = alg.mult_matrix(l, q);
    std::vector<Scalar> e(alg.rank(), q.zero());
    e[l] = q.one();
    for (int t = 0; t < 5; ++t) {
      auto x = random_central(alg.rank(), rng);
      CHECK(m.apply(x) == alg.multiply(e, x));
    }
  }
}

TEST_CASE("center membership") {
  auto g = builtin_group_by_name("S3");
  auto p = conjugacy_classes(g);
  const auto q = FieldContext::rationals();
  std::vector<Scalar> v(6, q.zero());
  for (int x : p.classes[1]) v[static_cast<std::size_t>(x)] = q.from_integer(2);
  CHECK(center_membership_check(g, p, v));
  v[static_cast<std::size_t>(p.classes[1][0])] = q.one();
  CHECK_FALSE(center_membership_check(g, p, v));
  std::vector<Scalar> single(6, q.zero());
  single[static_cast<std::size_t>(p.representative(2))] = q.one();
  CHECK_FALSE(center_membership_check(g, p, single));
}

TEST_CASE("abelian groups have one class per element") {
  auto g = builtin_group_by_name("C6");
  auto alg = structure_constants(g);
  CHECK(alg.rank() == 6);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const auto ca = static_cast<std::size_t>(alg.partition().class_of[static_cast<std::size_t>(a)]);
      const auto cb = static_cast<std::size_t>(alg.partition().class_of[static_cast<std::size_t>(b)]);
      const auto cab = static_cast<std::size_t>(alg.partition().class_of[static_cast<std::size_t>(g.mul(a, b))]);
      CHECK(alg.c(ca, cb, cab) == 1);
    }
}
