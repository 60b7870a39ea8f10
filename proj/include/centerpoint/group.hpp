#pragma once

// Finite groups as explicit multiplication tables, plus conjugacy-class data.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace centerpoint {

/// Images of 0..n-1.
using Permutation = std::vector<int>;

/// (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);
Permutation invert(const Permutation& p);
Permutation identity_permutation(int n);
/// 1-based cycle notation without fixed points; "()" for the identity.
std::string cycle_notation(const Permutation& p);
/// Parses 1-based cycle notation such as "(1 2)(3 4)" on n points.
Permutation parse_cycles(std::string_view text, int n);
int permutation_sign(const Permutation& p);

class GroupTable {
 public:
  /// Builds a table from a closed list of distinct permutations with the
  /// identity first. Element i of the table is perms[i].
  static GroupTable from_permutations(std::vector<Permutation> perms, std::string name);
  /// Builds from an explicit table (row g, column h = index of g*h).
  /// Throws InputError if the group axioms fail or 0 is not the identity.
  static GroupTable from_table(std::vector<int> flat_mul, std::size_t order, std::vector<std::string> labels,
                               std::string name);

  std::size_t order() const { return order_; }
  int identity() const { return 0; }
  int mul(int g, int h) const { return mul_[static_cast<std::size_t>(g) * order_ + static_cast<std::size_t>(h)]; }
  int inv(int g) const { return inv_[static_cast<std::size_t>(g)]; }
  int power(int g, long long k) const;
  int element_order(int g) const { return elem_order_[static_cast<std::size_t>(g)]; }
  int exponent() const { return exponent_; }
  const std::string& name() const { return name_; }
  const std::string& label(int g) const { return labels_[static_cast<std::size_t>(g)]; }

  bool has_permutations() const { return !perms_.empty(); }
  /// Number of points acted on (0 for abstract tables).
  int degree() const { return degree_; }
  const Permutation& permutation(int g) const { return perms_[static_cast<std::size_t>(g)]; }
  /// Index of a permutation in the table, or -1.
  int index_of(const Permutation& p) const;

 private:
  void finish();

  std::size_t order_ = 0;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
  int degree_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Permutation> perms_;
  std::map<Permutation, int> perm_index_;
};

struct ClassPartition {
  std::vector<int> class_of;
  std::vector<std::vector<int>> classes;  // sorted element indices; class 0 = {identity}
  std::vector<std::size_t> sizes;
  std::vector<int> inverse_class;
  std::vector<int> class_element_order;
  /// power_table[k][c] = class of g^k for g in class c, 0 <= k <= exponent.
  std::vector<std::vector<int>> power_table;

  std::size_t count() const { return classes.size(); }
  int representative(int c) const { return classes[static_cast<std::size_t>(c)].front(); }
  int power_class(int c, long long k) const;
};

ClassPartition conjugacy_classes(const GroupTable& g);

/// Breadth-first closure of the generators. Each BFS level is sorted
/// lexicographically by image lists before indices are assigned.
/// `degree` is only consulted for an empty generator list.
GroupTable build_group_from_generators(const std::vector<Permutation>& generators, std::size_t limit,
                                       int degree = 0);

enum class GroupFamily { Symmetric, Alternating, Cyclic, Dihedral, Quaternion8, DirectProduct };

/// Canonical orderings:
///  symmetric / alternating: by number of moved points, then cycle type in
///    decreasing lexicographic order, then image list;
///  cyclic C_n: element k is c^k;
///  dihedral D_n (order 2n): r^k for k < n, then s r^k;
///  quaternion8: 1, -1, i, -i, j, -j, k, -k.
/// Throws UnsupportedParameter for bad parameters or order above 2520.
GroupTable builtin_group(GroupFamily family, int parameter = 0);
/// Element (a, b) has index a * |B| + b.
GroupTable direct_product(const GroupTable& a, const GroupTable& b);

/// "S3", "A5", "C6", "D4", "Q8", "C2xC2", or "family:param" such as
/// "symmetric:3", "dihedral:5", "direct_product:C2xC3".
GroupTable builtin_group_by_name(std::string_view name);

/// Exhaustive check of the table invariants; returns an empty string on success.
std::string check_group_axioms(const GroupTable& g);

}  // namespace centerpoint
