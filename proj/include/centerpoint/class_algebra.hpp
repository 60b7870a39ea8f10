#pragma once

// The center of the group algebra in the class-sum basis.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "centerpoint/group.hpp"
#include "centerpoint/linalg.hpp"

namespace centerpoint {

class ClassAlgebra {
 public:
  ClassAlgebra(std::shared_ptr<const GroupTable> group, ClassPartition partition, std::vector<long long> constants);

  const GroupTable& group() const { return *group_; }
  std::shared_ptr<const GroupTable> group_ptr() const { return group_; }
  const ClassPartition& partition() const { return partition_; }
  std::size_t rank() const { return partition_.count(); }

  /// Coefficient of class-sum nu in (class-sum lambda) * (class-sum mu).
  long long c(std::size_t lambda, std::size_t mu, std::size_t nu) const {
    return c_[(lambda * rank() + mu) * rank() + nu];
  }
  /// Left multiplication by class-sum lambda: entry (nu, mu) = c(lambda, mu, nu).
  Matrix mult_matrix(std::size_t lambda, const FieldContext& ctx) const;
  /// Product of two central elements given by class-sum coordinates.
  std::vector<Scalar> multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// The unit (class-sum of the identity) in the given field.
  std::vector<Scalar> unit(const FieldContext& ctx) const;

 private:
  std::shared_ptr<const GroupTable> group_;
  ClassPartition partition_;
  std::vector<long long> c_;
};

ClassAlgebra structure_constants(std::shared_ptr<const GroupTable> group, ClassPartition partition);
ClassAlgebra structure_constants(const GroupTable& group);

/// True iff the group-basis coefficients are constant on every class.
bool center_membership_check(const GroupTable& group, const ClassPartition& partition,
                             std::span<const Scalar> element);

/// Symbol for a class: "1" for the identity, then α, β, γ, ... and c<k> past the alphabet.
std::string class_symbol(std::size_t cls);
/// Products of non-identity class sums, e.g. "α² = 3 + 3β", "αβ = 2α".
std::vector<std::string> relation_strings(const ClassAlgebra& algebra);

}  // namespace centerpoint
