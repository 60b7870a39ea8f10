#pragma once

// Symmetric groups acting on d-way arrays: partitions, closed-form
// idempotents, symmetry-class decomposition and linear certificates.

#include <string>
#include <vector>

#include "centerpoint/idempotents.hpp"
#include "centerpoint/regular_rep.hpp"

namespace centerpoint {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int total() const;
  /// Number of parts equal to 1.
  int fixed_points() const;
  /// Sign of any permutation with this cycle type.
  int sign() const;
  /// "(2,1,1)".
  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Ascending lexicographic order on parts, so (1,...,1) comes first and (d) last.
std::vector<Partition> partitions_of(int d);
/// Cycle lengths of p including fixed points.
Partition cycle_type(const Permutation& p);
/// Cycle type of every class of a permutation group.
std::vector<Partition> class_cycle_types(const GroupTable& group, const ClassPartition& partition);

enum class SymmetryKind { Symmetric, Alternating, Standard, Other };
std::string to_string(SymmetryKind kind);

/// (1/d!) sum e_s, (1/d!) sum sgn(s) e_s, or ((d-1)/d!) sum (Fix(s) - 1) e_s
/// over the builtin S_d. Throws BadCharacteristic when 0 < char <= d and
/// InputError for Other or a group that is not a full symmetric group.
AlgebraElement closed_form_idempotent(const GroupTable& sd, SymmetryKind kind, const FieldContext& ctx);

/// Recognizes the symmetric, alternating and standard points by their
/// coordinates |l|, sgn(l)|l| and |l|(Fix(l) - 1)/(d - 1).
SymmetryKind classify_point(const std::vector<Scalar>& point, const GroupTable& sd, const ClassPartition& partition);

/// Dense n^d array indexed row-major by (x_1, ..., x_d), each in 0..n-1.
struct TensorArray {
  int d = 0;
  int n = 0;
  std::vector<Scalar> entries;

  static TensorArray zeros(int d, int n, const FieldContext& ctx);
  std::size_t index(const std::vector<int>& xs) const;
  std::vector<int> multi_index(std::size_t flat) const;
  const Scalar& at(const std::vector<int>& xs) const { return entries[index(xs)]; }
  Scalar& at(const std::vector<int>& xs) { return entries[index(xs)]; }
  bool is_zero() const;

  TensorArray& operator+=(const TensorArray& o);
  friend bool operator==(const TensorArray& a, const TensorArray& b) {
    return a.d == b.d && a.n == b.n && a.entries == b.entries;
  }
};

/// (alpha F)(x_1, ..., x_d) = sum_s a_s F(x_s(1), ..., x_s(d)). Throws ArityMismatch.
TensorArray act(const AlgebraElement& alpha, const GroupTable& sd, const TensorArray& t);

/// One component beta F per idempotent.
std::vector<TensorArray> decompose_tensor(const TensorArray& t, const GroupTable& sd,
                                          const std::vector<AlgebraElement>& idempotents);

/// For every non-identity class l: sum_{s in l} F(x_s(1), ...) = point[l] F, at every index tuple.
bool check_symmetry_class(const TensorArray& t, const GroupTable& sd, const ClassPartition& partition,
                          const std::vector<Scalar>& point);

enum class VanishingPattern { Diagonal, Slice };

/// Diagonal: the sum of all non-symmetric components vanishes at (x, ..., x).
/// Slice: the sum of all components other than the symmetric and standard
/// ones vanishes at every tuple with one entry y and the rest x.
VerificationReport vanishing_certificates(const std::vector<TensorArray>& components,
                                          const std::vector<SymmetryKind>& kinds, VanishingPattern which);

/// Sums of |Fix(s)| over s with s(d) = d and with s(d) = d - 1.
std::pair<long long, long long> fixed_point_sums(int d);

struct EquationCertificate {
  /// sum_{h in H} chi(h) e_h for one subgroup H and chi trivial or sign.
  AlgebraElement element;
  /// e.g. "young (2,2) sign" or "cyclic 3 trivial".
  std::string family;
  /// e.g. "F(x1,x2,x3) + F(x2,x3,x1) + F(x3,x1,x2) = 0".
  std::string equation;
};

/// A set of subgroup sums, each annihilating the component of point v, whose
/// common kernel is exactly that component. Families are whole conjugacy
/// classes of subgroups: Young subgroups with trivial or sign character and
/// cyclic subgroups generated by k-cycles (k >= 3). Chooses the fewest
/// certificates, then the fewest terms, then the earliest families. Falls
/// back to the separating class-sum element when no family set works.
std::vector<EquationCertificate> equation_certificates(const GroupTable& sd, const ClassPartition& partition,
                                                       const PointTable& points, std::size_t v);

/// "F(x2,x1,x3) - ..." text for a group algebra element over S_d.
std::string render_equation(const AlgebraElement& alpha, const GroupTable& sd);

}  // namespace centerpoint
