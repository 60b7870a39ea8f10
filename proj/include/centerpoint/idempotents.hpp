#pragma once

// Primitive central idempotents, dimensions and characters from the points.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "centerpoint/point_solver.hpp"

namespace centerpoint {

struct CentralIdempotent {
  /// Class-sum coordinates: the idempotent is sum_lambda coeffs[lambda] * alpha_lambda.
  std::vector<Scalar> coeffs;
  std::vector<Scalar> point;
  int dim = 0;
};

struct CharacterTable {
  FieldContext field = FieldContext::rationals();
  std::vector<std::vector<Scalar>> rows;  // one per irreducible, columns are classes
  std::vector<int> dims;
  std::vector<std::size_t> class_sizes;
};

/// Rows are the points, identity coordinate first.
Matrix point_matrix(const PointTable& points);

/// Row v of B = (A^-1)^t gives the idempotent of point v. Throws SingularMatrix.
std::vector<CentralIdempotent> idempotents_from_points(const PointTable& points, const ClassAlgebra& algebra);

/// Integer square root of |G| * coeffs[0]. Over F_p the value is first
/// reconstructed as a rational. Throws NotAPerfectSquare.
int dimension_of(std::span<const Scalar> coeffs, const GroupTable& group);

/// chi(lambda) = a_lambda * dim / |lambda|. In characteristic zero throws
/// NonIntegralCharacter unless every value is an algebraic integer.
CharacterTable character_table(const PointTable& points, const std::vector<int>& dims,
                               const ClassPartition& partition);

/// Idempotency, orthogonality, partition of unity and sum of squared dimensions.
VerificationReport verify_idempotent_system(const std::vector<CentralIdempotent>& system,
                                            const ClassAlgebra& algebra);

/// (1/|G|) sum_lambda |lambda| chi_V(lambda*) chi_W(lambda) = delta_VW, lambda* the inverse class.
VerificationReport verify_character_orthogonality(const CharacterTable& table, const ClassPartition& partition,
                                                  std::size_t group_order);

struct SeparatingElement {
  /// Class-sum coefficients of f(alpha): coeffs[0] is the constant term.
  std::vector<Scalar> coeffs;
  /// f evaluated at every point: zero exactly at the chosen one.
  std::vector<Scalar> values;
  /// Affine polynomial in x, y, z, w, ... (one variable per non-identity class).
  std::string polynomial;
  /// Class index when f = x_lambda - a_lambda, otherwise -1.
  int coordinate = -1;
};

/// Name of the polynomial variable for class lambda >= 1: x, y, z, w, then x5, x6, ...
std::string class_variable(std::size_t lambda);

/// Affine form vanishing at point v and nowhere else on the table. Prefers
/// single coordinates x_lambda - a_lambda (nonzero a_lambda first, then by
/// class index) and falls back to seeded random integer forms.
SeparatingElement separating_element(const PointTable& points, std::size_t v, std::uint64_t seed = 0);

/// Coefficients over group elements of a central element given in class sums.
std::vector<Scalar> expand_to_group_basis(std::span<const Scalar> class_coeffs, const ClassPartition& partition);

}  // namespace centerpoint
