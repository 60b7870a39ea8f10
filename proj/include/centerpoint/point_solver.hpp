#pragma once

// The finite point set of the center: one point per irreducible
// representation, with coordinate lambda equal to |lambda| chi(lambda) / dim.

#include <cstdint>
#include <vector>

#include "centerpoint/class_algebra.hpp"
#include "centerpoint/report.hpp"

namespace centerpoint {

struct PointTable {
  FieldContext field = FieldContext::rationals();
  /// One coordinate vector per point; coordinate 0 (identity class) is 1.
  std::vector<std::vector<Scalar>> points;
  /// Prime used for the modular solve (0 if unknown).
  std::uint64_t prime = 0;

  std::size_t size() const { return points.size(); }
};

/// The trivial point (the only one with nonzero coordinate sum) first, then
/// descending lexicographic order on coordinates under compare_canonical.
void sort_points(PointTable& table);

/// Smallest prime p > 4|G|^2 with p = 1 mod exponent(G). The seed is accepted
/// for interface symmetry and ignored: the choice is deterministic.
std::uint64_t choose_solving_prime(const GroupTable& group, std::uint64_t seed = 0);

/// Joint eigendecomposition of the class multiplication matrices over F_p.
/// Throws UnsupportedParameter if p is not prime or divides |G|, and
/// SplitFailure if the joint eigenspaces do not become one-dimensional.
PointTable solve_points_mod_p(const ClassAlgebra& algebra, std::uint64_t p, std::uint64_t seed = 0);

/// Exact characteristic-zero points from modular ones via root-of-unity
/// multiplicities. The result lives in Q when every coordinate is rational,
/// otherwise in Q(zeta_m) for the smallest conductor m dividing the exponent
/// that contains all coordinates. Throws LiftFailure on inconsistent data.
PointTable lift_points(const PointTable& mod_p, const ClassAlgebra& algebra);

/// choose_solving_prime + solve_points_mod_p + lift_points.
PointTable compute_points(const ClassAlgebra& algebra, std::uint64_t seed = 0);

/// Reduces every coordinate modulo p (see project_scalar) and sorts.
PointTable project_points(const PointTable& table, std::uint64_t p);

/// Re-expresses every coordinate in a field containing them all.
PointTable convert_points(const PointTable& table, const FieldContext& target);

/// Homomorphism property per point and relation, identity coordinate,
/// pairwise distinctness, and count = number of classes.
VerificationReport verify_points(const PointTable& table, const ClassAlgebra& algebra);

}  // namespace centerpoint
