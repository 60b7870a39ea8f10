#include <doctest.h>

#include <algorithm>
#include <set>

#include "centerpoint/errors.hpp"
#include "centerpoint/group.hpp"

using namespace centerpoint;

namespace {

const char* const kBuiltins[] = {"S3", "S4", "S5", "A4", "A5", "D4", "D5", "D6", "Q8", "C2xC2", "C6"};

// Orbits under conjugation, computed directly from the table.
std::set<std::set<int>> brute_classes(const GroupTable& g) {
  std::set<std::set<int>> out;
  const int n = static_cast<int>(g.order());
  for (int x = 0; x < n; ++x) {
    std::set<int> orbit;
    for (int h = 0; h < n; ++h) orbit.insert(g.mul(g.mul(h, x), g.inv(h)));
    out.insert(orbit);
  }
  return out;
}

}  // namespace

TEST_CASE("permutation helpers") {
  auto a = parse_cycles("(1 2)", 3), b = parse_cycles("(1 2 3)", 3);
  // (a*b)(i) = a(b(i)): 0 -> 1 -> 0, 1 -> 2 -> 2, 2 -> 0 -> 1
  CHECK(compose(a, b) == Permutation{0, 2, 1});
  CHECK(compose(b, invert(b)) == identity_permutation(3));
  CHECK(cycle_notation(identity_permutation(4)) == "()");
  CHECK(cycle_notation(parse_cycles("(1 3)(2 4)", 4)) == "(1 3)(2 4)");
  CHECK(permutation_sign(a) == -1);
  CHECK(permutation_sign(b) == 1);
  CHECK(permutation_sign(parse_cycles("(1 2 3 4)", 4)) == -1);
}

TEST_CASE("closure from generators") {
  auto s3 = build_group_from_generators({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, 100);
  CHECK(s3.order() == 6);
  CHECK(s3.exponent() == 6);
  CHECK(s3.permutation(0) == identity_permutation(3));

  auto c4 = build_group_from_generators({parse_cycles("(1 2 3 4)", 4)}, 100);
  CHECK(c4.order() == 4);
  CHECK(c4.exponent() == 4);

  auto trivial = build_group_from_generators({}, 10, 3);
  CHECK(trivial.order() == 1);
  CHECK(trivial.degree() == 3);

  CHECK_THROWS_AS(build_group_from_generators({parse_cycles("(1 2)", 3), parse_cycles("(1 2 3)", 3)}, 5),
                  ClosureExceedsLimit);
  CHECK_THROWS_AS(build_group_from_generators({Permutation{0, 0, 1}}, 10), InvalidPermutation);
  CHECK_THROWS_AS(build_group_from_generators({Permutation{0, 1}, Permutation{0, 1, 2}}, 10), InvalidPermutation);
}

TEST_CASE("closure is deterministic and independent of generator order") {
  auto a = build_group_from_generators({parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)}, 100);
  auto b = build_group_from_generators({parse_cycles("(1 2)", 4), parse_cycles("(1 2 3 4)", 4)}, 100);
  auto c = build_group_from_generators({parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 2)", 4)}, 100);
  REQUIRE(a.order() == 24);
  for (int g = 0; g < 24; ++g) {
    CHECK(a.permutation(g) == b.permutation(g));
    CHECK(a.permutation(g) == c.permutation(g));
  }
}

TEST_CASE("builtin orders and exponents") {
  struct Row {
    const char* name;
    std::size_t order;
    int exponent;
  };
  for (auto r : {Row{"S3", 6, 6}, Row{"S4", 24, 12}, Row{"S5", 120, 60}, Row{"A4", 12, 6}, Row{"A5", 60, 30},
                 Row{"D4", 8, 4}, Row{"D5", 10, 10}, Row{"D6", 12, 6}, Row{"Q8", 8, 4}, Row{"C2xC2", 4, 2},
                 Row{"C6", 6, 6}, Row{"C12", 12, 12}, Row{"symmetric:6", 720, 60}}) {
    auto g = builtin_group_by_name(r.name);
    CHECK_MESSAGE(g.order() == r.order, r.name);
    CHECK_MESSAGE(g.exponent() == r.exponent, r.name);
  }
  CHECK_THROWS_AS(builtin_group(GroupFamily::Symmetric, 7), UnsupportedParameter);
  CHECK_THROWS_AS(builtin_group(GroupFamily::Cyclic, 0), UnsupportedParameter);
  CHECK_THROWS_AS(builtin_group(GroupFamily::Dihedral, 0), UnsupportedParameter);
  CHECK_THROWS_AS(builtin_group_by_name("nonsense"), InputError);
}

TEST_CASE("builtin tables satisfy the group axioms") {
  for (auto name : kBuiltins) {
    auto g = builtin_group_by_name(name);
    CHECK_MESSAGE(check_group_axioms(g).empty(), name);
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      CHECK(g.mul(x, g.inv(x)) == 0);
      CHECK(g.power(x, g.element_order(x)) == 0);
      CHECK(g.exponent() % g.element_order(x) == 0);
    }
  }
}

TEST_CASE("from_table rejects non-groups") {
  // 0 is an identity, but 1*1 = 1 leaves 1 without an inverse
  CHECK_THROWS_AS(GroupTable::from_table({0, 1, 1, 1}, 2, {"e", "a"}, "bad"), InputError);
  CHECK_THROWS_AS(GroupTable::from_table({1, 0, 0, 1}, 2, {"e", "a"}, "bad"), InputError);
  auto c2 = GroupTable::from_table({0, 1, 1, 0}, 2, {"e", "a"}, "C2");
  CHECK(c2.order() == 2);
  CHECK(c2.inv(1) == 1);
}

TEST_CASE("conjugacy classes match the orbit oracle") {
  for (auto name : kBuiltins) {
    auto g = builtin_group_by_name(name);
    auto p = conjugacy_classes(g);
    std::set<std::set<int>> got;
    for (const auto& c : p.classes) got.insert(std::set<int>(c.begin(), c.end()));
    CHECK_MESSAGE(got == brute_classes(g), name);

    CHECK(p.classes[0] == std::vector<int>{0});
    std::size_t total = 0;
    for (std::size_t c = 0; c < p.count(); ++c) {
      total += p.sizes[c];
      CHECK(p.sizes[c] == p.classes[c].size());
      CHECK(g.order() % p.sizes[c] == 0);
      CHECK(p.inverse_class[static_cast<std::size_t>(p.inverse_class[c])] == static_cast<int>(c));
      CHECK(p.class_of[static_cast<std::size_t>(g.inv(p.representative(static_cast<int>(c))))] ==
            p.inverse_class[c]);
      if (c > 0) CHECK(p.representative(static_cast<int>(c - 1)) < p.representative(static_cast<int>(c)));
    }
    CHECK(total == g.order());
    for (int x = 0; x < static_cast<int>(g.order()); ++x)
      for (int k = 0; k <= g.exponent(); ++k)
        CHECK(p.power_class(p.class_of[static_cast<std::size_t>(x)], k) ==
              p.class_of[static_cast<std::size_t>(g.power(x, k))]);
  }
}

TEST_CASE("class sizes of the symmetric groups in builtin order") {
  CHECK(conjugacy_classes(builtin_group_by_name("S3")).sizes == std::vector<std::size_t>{1, 3, 2});
  auto s4 = builtin_group_by_name("S4");
  auto p = conjugacy_classes(s4);
  CHECK(p.sizes == std::vector<std::size_t>{1, 6, 8, 6, 3});
  CHECK(cycle_notation(s4.permutation(p.representative(1))).size() == 5);  // "(a b)"
  CHECK(s4.element_order(p.representative(2)) == 3);
  CHECK(s4.element_order(p.representative(3)) == 4);
  CHECK(s4.element_order(p.representative(4)) == 2);
  CHECK(conjugacy_classes(builtin_group_by_name("S5")).count() == 7);
  CHECK(conjugacy_classes(builtin_group_by_name("A5")).count() == 5);
  CHECK(conjugacy_classes(builtin_group_by_name("Q8")).sizes == std::vector<std::size_t>{1, 1, 2, 2, 2});
}

TEST_CASE("quaternion table") {
  auto q = builtin_group_by_name("Q8");
  // 1, -1, i, -i, j, -j, k, -k
  CHECK(q.mul(2, 4) == 6);
  CHECK(q.mul(4, 2) == 7);
  CHECK(q.mul(2, 2) == 1);
  CHECK(q.mul(1, 1) == 0);
}

TEST_CASE("direct product indexing") {
  auto c2 = builtin_group(GroupFamily::Cyclic, 2), c3 = builtin_group(GroupFamily::Cyclic, 3);
  auto p = direct_product(c2, c3);
  CHECK(p.order() == 6);
  CHECK(p.exponent() == 6);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 3; ++b)
      for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 3; ++y) CHECK(p.mul(a * 3 + b, x * 3 + y) == c2.mul(a, x) * 3 + c3.mul(b, y));
  CHECK(conjugacy_classes(p).count() == 6);
}

TEST_CASE("index_of inverts permutation") {
  auto g = builtin_group_by_name("A4");
  for (int x = 0; x < 12; ++x) CHECK(g.index_of(g.permutation(x)) == x);
  CHECK(g.index_of(parse_cycles("(1 2)", 4)) == -1);
}
