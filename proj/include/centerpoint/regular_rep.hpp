#pragma once

// The full group algebra K(G) in the element basis, its two-sided components
// beta K(G), the right-multiplication rank test and explicit representations.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "centerpoint/group.hpp"
#include "centerpoint/linalg.hpp"
#include "centerpoint/report.hpp"

namespace centerpoint {

/// sum_g coeffs[g] e_g, indexed by the element indices of a GroupTable.
struct AlgebraElement {
  std::vector<Scalar> coeffs;

  static AlgebraElement zero(const GroupTable& group, const FieldContext& ctx);
  static AlgebraElement basis(const GroupTable& group, int g, const FieldContext& ctx);
  /// Sum of e_g over every element.
  static AlgebraElement total(const GroupTable& group, const FieldContext& ctx);

  std::size_t size() const { return coeffs.size(); }
  const FieldContext& context() const { return coeffs.front().context(); }
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a);
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.coeffs == b.coeffs; }
};

/// Every coefficient embedded into ctx (see embed_scalar).
AlgebraElement change_field(const AlgebraElement& a, const FieldContext& ctx);

/// Convolution via e_g e_h = e_{gh}. Throws ContextMismatch.
AlgebraElement algebra_multiply(const GroupTable& group, const AlgebraElement& a, const AlgebraElement& b);

enum class Side { Left, Right };

/// Matrix of x -> a x (left) or x -> x a (right) on column vectors in the e_g basis.
Matrix mult_matrix(const GroupTable& group, const AlgebraElement& a, Side side);

/// Canonical echelon basis of beta K(G), the column space of left
/// multiplication by beta.
std::vector<AlgebraElement> component_basis(const GroupTable& group, const AlgebraElement& beta);

/// Coordinates of x in an echelon basis such as component_basis returns.
/// Throws NotInComponent when x is outside the span.
std::vector<Scalar> coordinates_in(const std::vector<AlgebraElement>& basis, const AlgebraElement& x);

/// Matrix of y -> y alpha on the span of the basis (column k holds the
/// coordinates of basis[k] alpha).
Matrix right_mult_matrix(const GroupTable& group, const std::vector<AlgebraElement>& basis,
                         const AlgebraElement& alpha);

/// Rank of y -> y alpha on beta K(G). Throws NotInComponent unless beta alpha = alpha.
std::size_t right_mult_rank(const GroupTable& group, const AlgebraElement& beta, const AlgebraElement& alpha);

/// Rank of alpha acting on the irreducible V with beta K(G) = End(V): the
/// right-multiplication rank divided by dim V. Throws NotAPerfectSquare when
/// beta K(G) does not have square dimension.
std::size_t element_rank(const GroupTable& group, const AlgebraElement& beta, const AlgebraElement& alpha);

/// Integer n with n * n = dim beta K(G). Throws NotAPerfectSquare.
std::size_t component_side(const GroupTable& group, const AlgebraElement& beta);

struct SplittingWitness {
  AlgebraElement element;
  /// Coordinates in component_basis.
  std::vector<Scalar> coordinates;
  std::size_t rank = 0;
  /// Candidates examined, including the successful one.
  std::size_t trials = 0;
};

/// Searches beta K(G) over ctx for alpha whose right-multiplication rank is at
/// most n = sqrt(dim). Structured candidates come first: single basis vectors,
/// then b_i + u b_j and b_i + u b_j + w b_k with u, w running over +-zeta^k,
/// subsets taken from the highest indices down. Seeded random coordinates
/// follow. std::nullopt after `budget` candidates says nothing about splitting.
std::optional<SplittingWitness> find_splitting_witness(const GroupTable& group, const AlgebraElement& beta,
                                                       const FieldContext& ctx, std::uint64_t seed,
                                                       std::size_t budget);

/// Matrices of a representation acting on column vectors, one per element.
struct RepMatrices {
  std::size_t dimension = 0;
  FieldContext field = FieldContext::rationals();
  std::vector<Matrix> matrices;
  /// Rows span the underlying space inside its ambient space; empty for
  /// representations given on K^n directly.
  Matrix basis;

  const Matrix& operator()(int g) const { return matrices[static_cast<std::size_t>(g)]; }
};

/// Left multiplication by each e_g on W = beta K(G) witness. Throws
/// RankMismatch unless the witness has right-multiplication rank sqrt(dim).
RepMatrices extract_irrep(const GroupTable& group, const AlgebraElement& beta, const AlgebraElement& witness);

/// rho(g) rho(h) = rho(gh) for all pairs and rho(identity) = 1.
VerificationReport verify_representation(const RepMatrices& rep, const GroupTable& group);

/// sum_g a_g rho(g).
Matrix apply_tilde_rho(const AlgebraElement& alpha, const RepMatrices& rep);

/// g e_i = e_{g(i)} on K^degree. Requires a permutation group.
RepMatrices permutation_representation(const GroupTable& group, const FieldContext& ctx);
/// K(G) acting on itself from the left.
RepMatrices left_regular_representation(const GroupTable& group, const FieldContext& ctx);
/// The action on an invariant subspace given by basis rows, in the echelon
/// form of that basis. Throws NotInvariant.
RepMatrices restrict_representation(const RepMatrices& rep, const Matrix& subspace);

/// Echelon basis (rows) of the kernel of the averaged projector onto the
/// subspace. Throws NotInvariant or BadCharacteristic.
Matrix maschke_complement(const RepMatrices& rep, const Matrix& subspace, std::size_t group_order);

/// dim {X : X rho(g) = rho(g) X for all g}.
std::size_t commutant_dimension(const RepMatrices& rep);

}  // namespace centerpoint
