#pragma once

// JSON documents for groups, points, idempotents, character tables,
// representations and tensors. Values are exact strings; every document
// carries schema_version and kind, and roundtrip() re-emits it through the
// typed parsers.

#include <json.hpp>

#include "centerpoint/idempotents.hpp"
#include "centerpoint/regular_rep.hpp"
#include "centerpoint/symmetry.hpp"

namespace centerpoint {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Rationals and residues as "p/q" strings; cyclotomics as {"conductor", "coeffs"}.
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j, const FieldContext& ctx);
Json scalars_to_json(std::span<const Scalar> xs);
std::vector<Scalar> scalars_from_json(const Json& j, const FieldContext& ctx);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldContext& ctx);

/// Accepts {"builtin": "S3"}, {"family": "dihedral", "parameter": 4},
/// {"generators": [[1,0,2], "(1 2 3)"], "degree": 3}, {"elements": [...]}
/// or {"table": [[...]], "labels": [...]}. Throws InputError.
GroupTable group_from_json(const Json& j);
/// Explicit form preserving element order: "elements" for permutation
/// groups, "table" otherwise.
Json group_to_json(const GroupTable& g);

Json classes_to_json(const GroupTable& g, const ClassPartition& p);

Json class_algebra_to_json(const ClassAlgebra& a);
/// Rebuilds the algebra from the embedded group and constants.
ClassAlgebra class_algebra_from_json(const Json& j);

Json points_to_json(const PointTable& t);
PointTable points_from_json(const Json& j);

Json idempotents_to_json(const std::vector<CentralIdempotent>& system, const FieldContext& field);
std::vector<CentralIdempotent> idempotents_from_json(const Json& j);

Json character_table_to_json(const CharacterTable& t);
CharacterTable character_table_from_json(const Json& j);

Json representation_to_json(const RepMatrices& rep);
RepMatrices representation_from_json(const Json& j);

/// {"d", "n", "entries"} with entries row-major; "field" defaults to Q.
Json tensor_to_json(const TensorArray& t);
TensorArray tensor_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

/// {"schema_version": 1, "kind": kind}.
Json document(const std::string& kind);

/// Parses every typed section of a document and emits it again. Equal to the
/// input for every document the command-line tool writes. Throws InputError
/// on schema violations.
Json roundtrip(const Json& doc);

}  // namespace centerpoint
