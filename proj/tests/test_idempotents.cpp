#include <doctest.h>

#include <algorithm>

#include "centerpoint/errors.hpp"
#include "centerpoint/idempotents.hpp"
#include "centerpoint/regular_rep.hpp"

using namespace centerpoint;

namespace {

const char* const kGroups[] = {"S3", "S4", "S5", "A4", "A5", "D4", "D5", "D6", "Q8", "C2xC2", "C6"};

struct Pipeline {
  GroupTable group;
  ClassAlgebra algebra;
  PointTable points;
  std::vector<CentralIdempotent> system;
};

Pipeline run(const char* name) {
  auto g = builtin_group_by_name(name);
  auto alg = structure_constants(g);
  auto pts = compute_points(alg);
  auto sys = idempotents_from_points(pts, alg);
  return {g, alg, pts, sys};
}

std::vector<Scalar> fractions(const FieldContext& f, std::initializer_list<int> num, int den) {
  std::vector<Scalar> out;
  for (int x : num) out.push_back(f.from_rational(Rational(x, den)));
  return out;
}

std::vector<std::vector<Scalar>> sorted_rows(std::vector<std::vector<Scalar>> rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                        [](const Scalar& x, const Scalar& y) { return compare_canonical(x, y) < 0; });
  });
  return rows;
}

AlgebraElement group_element(const Pipeline& p, std::span<const Scalar> class_coeffs) {
  return {expand_to_group_basis(class_coeffs, p.algebra.partition())};
}

}  // namespace

TEST_CASE("idempotent rows of the worked examples") {
  auto s3 = run("S3");
  const auto q = FieldContext::rationals();
  REQUIRE(s3.system.size() == 3);
  CHECK(s3.system[0].coeffs == fractions(q, {1, 1, 1}, 6));
  CHECK(s3.system[1].coeffs == fractions(q, {4, 0, -2}, 6));
  CHECK(s3.system[2].coeffs == fractions(q, {1, -1, 1}, 6));
  CHECK(s3.system[1].dim == 2);

  auto s4 = run("S4");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& e : s4.system) rows.push_back(e.coeffs);
  CHECK(sorted_rows(rows) == sorted_rows({fractions(q, {1, 1, 1, 1, 1}, 24), fractions(q, {1, -1, 1, -1, 1}, 24),
                                          fractions(q, {4, 0, -2, 0, 4}, 24), fractions(q, {9, -3, 0, 3, -3}, 24),
                                          fractions(q, {9, 3, 0, -3, -3}, 24)}));

  auto q8 = run("Q8");
  std::vector<int> dims;
  for (const auto& e : q8.system) dims.push_back(e.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 1, 1, 2});
  // the two-dimensional idempotent is (4 - 4 alpha) / 8
  bool found = false;
  for (const auto& e : q8.system)
    if (e.dim == 2) found = e.coeffs == fractions(q, {4, -4, 0, 0, 0}, 8);
  CHECK(found);
}

TEST_CASE("idempotent systems verify for every builtin group") {
  for (auto name : kGroups) {
    auto p = run(name);
    auto rep = verify_idempotent_system(p.system, p.algebra);
    CHECK_MESSAGE(rep.ok(), name);
    CHECK(p.system.size() == p.algebra.rank());
    long long sq = 0;
    for (const auto& e : p.system) sq += static_cast<long long>(e.dim) * e.dim;
    CHECK(sq == static_cast<long long>(p.group.order()));
  }
}

TEST_CASE("B times A transpose is the identity") {
  for (auto name : kGroups) {
    auto p = run(name);
    auto a = point_matrix(p.points);
    Matrix b(p.system.size(), p.algebra.rank(), p.points.field);
    for (std::size_t i = 0; i < p.system.size(); ++i)
      for (std::size_t j = 0; j < p.algebra.rank(); ++j) b(i, j) = p.system[i].coeffs[j];
    CHECK_MESSAGE(b * a.transpose() == Matrix::identity(p.system.size(), p.points.field), name);
  }
}

TEST_CASE("coefficients are traces of left multiplication") {
  for (auto name : {"S3", "S4", "Q8", "A4", "D5"}) {
    auto p = run(name);
    const auto& f = p.points.field;
    const Scalar order = f.from_integer(static_cast<long long>(p.group.order()));
    for (const auto& e : p.system) {
      auto beta = group_element(p, e.coeffs);
      for (int g = 0; g < static_cast<int>(p.group.order()); ++g) {
        auto prod = algebra_multiply(p.group, AlgebraElement::basis(p.group, p.group.inv(g), f), beta);
        CHECK(beta.coeffs[static_cast<std::size_t>(g)] == mult_matrix(p.group, prod, Side::Left).trace() / order);
      }
      CHECK(beta.coeffs[0] == f.from_integer(e.dim * e.dim) / order);
    }
  }
}

TEST_CASE("coefficients are dimension times character over the order") {
  for (auto name : {"S4", "A5", "D6"}) {
    auto p = run(name);
    std::vector<int> dims;
    for (const auto& e : p.system) dims.push_back(e.dim);
    auto table = character_table(p.points, dims, p.algebra.partition());
    const auto& part = p.algebra.partition();
    const auto& f = p.points.field;
    for (std::size_t v = 0; v < p.system.size(); ++v)
      for (std::size_t l = 0; l < part.count(); ++l) {
        const auto inv = static_cast<std::size_t>(part.inverse_class[l]);
        CHECK(p.system[v].coeffs[l] ==
              f.from_integer(dims[v]) * table.rows[v][inv] / f.from_integer(static_cast<long long>(p.group.order())));
        // coordinate = |class| chi / dim
        CHECK(p.points.points[v][l] ==
              table.rows[v][l] * f.from_integer(static_cast<long long>(part.sizes[l])) / f.from_integer(dims[v]));
      }
  }
}

TEST_CASE("character tables") {
  auto s3 = run("S3");
  auto t = character_table(s3.points, {1, 2, 1}, s3.algebra.partition());
  const auto q = FieldContext::rationals();
  CHECK(t.rows[0] == fractions(q, {1, 1, 1}, 1));
  CHECK(t.rows[1] == fractions(q, {2, 0, -1}, 1));
  CHECK(t.rows[2] == fractions(q, {1, -1, 1}, 1));
  CHECK_THROWS_AS(character_table(s3.points, {1, 1, 1}, s3.algebra.partition()), NonIntegralCharacter);

  for (auto name : kGroups) {
    auto p = run(name);
    std::vector<int> dims;
    for (const auto& e : p.system) dims.push_back(e.dim);
    auto table = character_table(p.points, dims, p.algebra.partition());
    CHECK_MESSAGE(verify_character_orthogonality(table, p.algebra.partition(), p.group.order()).ok(), name);
    for (const auto& row : table.rows)
      for (const auto& x : row) CHECK(x.is_algebraic_integer());
  }
}

TEST_CASE("the icosahedral characters need the fifth roots of unity") {
  auto p = run("A5");
  REQUIRE(p.points.field == FieldContext::cyclotomic(5));
  std::vector<int> dims;
  for (const auto& e : p.system) dims.push_back(e.dim);
  auto table = character_table(p.points, dims, p.algebra.partition());
  const auto& f = table.field;
  // (1 + sqrt 5) / 2 = -(z^2 + z^3)
  const auto golden = -(f.zeta(2) + f.zeta(3));
  const auto conjugate = f.one() - golden;
  CHECK(golden * golden == golden + f.one());
  std::size_t irrational = 0;
  bool saw_golden = false, saw_conjugate = false;
  for (const auto& row : table.rows)
    for (const auto& x : row) {
      if (!x.is_rational()) ++irrational;
      saw_golden = saw_golden || x == golden;
      saw_conjugate = saw_conjugate || x == conjugate;
    }
  CHECK(irrational == 4);
  CHECK(saw_golden);
  CHECK(saw_conjugate);
}

TEST_CASE("dimension_of") {
  auto g = builtin_group_by_name("S3");
  const auto q = FieldContext::rationals();
  CHECK(dimension_of(fractions(q, {4, 0, -2}, 6), g) == 2);
  CHECK(dimension_of(fractions(q, {1, 1, 1}, 6), g) == 1);
  CHECK_THROWS_AS(dimension_of(fractions(q, {2, 0, 0}, 6), g), NotAPerfectSquare);
  const auto f = FieldContext::prime_field(151);
  std::vector<Scalar> mod{f.from_rational(Rational(4, 6)), f.zero(), f.from_rational(Rational(-2, 6))};
  CHECK(dimension_of(mod, g) == 2);
}

TEST_CASE("idempotents over a prime field") {
  auto g = builtin_group_by_name("S4");
  auto alg = structure_constants(g);
  auto pts = solve_points_mod_p(alg, 1201);
  auto sys = idempotents_from_points(pts, alg);
  CHECK(verify_idempotent_system(sys, alg).ok());
  std::vector<int> dims;
  for (const auto& e : sys) dims.push_back(e.dim);
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 2, 3, 3});
  // too small to reconstruct dim^2 / |G|
  CHECK_THROWS_AS(idempotents_from_points(solve_points_mod_p(alg, 7), alg), NotAPerfectSquare);
}

TEST_CASE("singular point tables are rejected") {
  auto p = run("S3");
  auto bad = p.points;
  bad.points[2] = bad.points[1];
  CHECK_THROWS_AS(idempotents_from_points(bad, p.algebra), SingularMatrix);
}

TEST_CASE("verification catches broken systems") {
  auto p = run("S3");
  auto missing = p.system;
  missing.pop_back();
  auto rep = verify_idempotent_system(missing, p.algebra);
  CHECK(rep.failed("partition of unity"));
  CHECK(rep.failed("count"));

  auto scaled = p.system;
  for (auto& c : scaled[0].coeffs) c = c.scaled(2);
  CHECK(verify_idempotent_system(scaled, p.algebra).failed("idempotent"));
}

TEST_CASE("separating polynomials") {
  auto s3 = run("S3");
  CHECK(separating_element(s3.points, 0).polynomial == "x - 3");
  CHECK(separating_element(s3.points, 1).polynomial == "y + 1");
  CHECK(separating_element(s3.points, 2).polynomial == "x + 3");
  const auto q = FieldContext::rationals();
  // y + 1 is e_1 + e_(123) + e_(132)
  auto y1 = separating_element(s3.points, 1);
  CHECK(y1.coeffs == fractions(q, {1, 0, 1}, 1));
  CHECK(y1.coordinate == 2);
  CHECK(class_variable(1) == "x");
  CHECK(class_variable(4) == "w");
  CHECK(class_variable(5) == "x5");

  auto s4 = run("S4");
  for (std::size_t v = 0; v < s4.points.size(); ++v)
    if (s4.points.points[v] == fractions(q, {1, 0, -4, 0, 3}, 1))
      CHECK(separating_element(s4.points, v).polynomial == "y + 4");
}

TEST_CASE("separating elements vanish at exactly one point") {
  for (auto name : kGroups) {
    auto p = run(name);
    const auto& f = p.points.field;
    for (std::size_t v = 0; v < p.points.size(); ++v) {
      auto s = separating_element(p.points, v, 3);
      for (std::size_t w = 0; w < p.points.size(); ++w) {
        Scalar val = f.zero();
        for (std::size_t l = 0; l < p.algebra.rank(); ++l) val += s.coeffs[l] * p.points.points[w][l];
        CHECK(val == s.values[w]);
        CHECK(val.is_zero() == (w == v));
      }
    }
  }
}

TEST_CASE("the kernel of a separating element is the component") {
  for (auto name : {"S3", "S4", "Q8", "D5"}) {
    auto p = run(name);
    for (std::size_t v = 0; v < p.points.size(); ++v) {
      auto f = group_element(p, separating_element(p.points, v).coeffs);
      auto beta = group_element(p, p.system[v].coeffs);
      auto kernel = row_space_basis(nullspace(mult_matrix(p.group, f, Side::Left)));
      auto comp = component_basis(p.group, beta);
      Matrix rows(comp.size(), p.group.order(), p.points.field);
      for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < p.group.order(); ++j) rows(i, j) = comp[i].coeffs[j];
      CHECK_MESSAGE(kernel == rows, name);
      CHECK(comp.size() == static_cast<std::size_t>(p.system[v].dim * p.system[v].dim));
    }
  }
}
