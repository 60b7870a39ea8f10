#include "centerpoint/serialize.hpp"

#include "centerpoint/errors.hpp"

namespace centerpoint {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::string text(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_string()) throw InputError(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

long long integer(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (v.is_number_integer()) return v.get<long long>();
  if (v.is_string()) {
    try {
      return std::stoll(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw InputError(std::string("key \"") + key + "\" must be an integer");
}

const Json& array(const Json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_array()) throw InputError(std::string("key \"") + key + "\" must be an array");
  return v;
}

FieldContext field_of(const Json& j) {
  try {
    return FieldContext::parse(text(j, "field"));
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Permutation permutation_from_json(const Json& j, int degree) {
  if (j.is_string()) {
    if (degree <= 0) throw InputError("cycle notation needs \"degree\"");
    return parse_cycles(j.get<std::string>(), degree);
  }
  if (!j.is_array()) throw InputError("permutation must be an image list or cycle string");
  Permutation p;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError("permutation images must be integers");
    p.push_back(x.get<int>());
  }
  if (degree > 0 && static_cast<int>(p.size()) != degree)
    throw InvalidPermutation("image list of length " + std::to_string(p.size()) + " on " + std::to_string(degree) +
                             " points");
  return p;
}

}  // namespace

Json scalar_to_json(const Scalar& x) {
  switch (x.context().kind()) {
    case FieldKind::Rational: return rational_to_string(x.to_rational());
    case FieldKind::PrimeField: return std::to_string(x.residue());
    case FieldKind::Cyclotomic: {
      Json coeffs = Json::array();
      for (const auto& c : x.cyclotomic_coeffs()) coeffs.push_back(rational_to_string(c));
      return Json{{"conductor", x.context().conductor()}, {"coeffs", coeffs}};
    }
  }
  return nullptr;
}

Scalar scalar_from_json(const Json& j, const FieldContext& ctx) {
  try {
    if (j.is_string()) return ctx.parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return ctx.from_integer(j.get<long long>());
    if (j.is_object()) {
      if (ctx.kind() != FieldKind::Cyclotomic) throw InputError("cyclotomic value in field " + ctx.name());
      if (integer(j, "conductor") != ctx.conductor())
        throw InputError("conductor " + std::to_string(integer(j, "conductor")) + " in field " + ctx.name());
      std::vector<Rational> coeffs;
      for (const auto& c : array(j, "coeffs")) {
        if (!c.is_string()) throw InputError("cyclotomic coefficients must be strings");
        coeffs.push_back(parse_rational(c.get<std::string>()));
      }
      if (static_cast<int>(coeffs.size()) != ctx.degree())
        throw InputError("expected " + std::to_string(ctx.degree()) + " cyclotomic coefficients");
      return Scalar::from_cyclotomic_coeffs(ctx, std::move(coeffs));
    }
  } catch (const InputError&) {
    throw;
  } catch (const Error& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad number: ") + e.what());
  }
  throw InputError("unrecognized scalar " + j.dump());
}

Json scalars_to_json(std::span<const Scalar> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(scalar_to_json(x));
  return out;
}

std::vector<Scalar> scalars_from_json(const Json& j, const FieldContext& ctx) {
  if (!j.is_array()) throw InputError("expected an array of scalars");
  std::vector<Scalar> out;
  for (const auto& x : j) out.push_back(scalar_from_json(x, ctx));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(scalars_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j, const FieldContext& ctx) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& r : j) rows.push_back(scalars_from_json(r, ctx));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) throw InputError("ragged matrix");
  if (rows.empty()) return Matrix(0, 0, ctx);
  return Matrix::from_rows(rows, ctx);
}

GroupTable group_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("group must be a JSON object");
  try {
    if (j.contains("builtin")) return builtin_group_by_name(text(j, "builtin"));
    if (j.contains("family")) {
      const auto fam = text(j, "family");
      if (j.contains("parameter")) {
        const auto& p = j.at("parameter");
        return builtin_group_by_name(fam + ":" + (p.is_string() ? p.get<std::string>() : p.dump()));
      }
      return builtin_group_by_name(fam);
    }
    const std::string name = j.contains("name") ? text(j, "name") : std::string("G");
    const int degree = j.contains("degree") ? static_cast<int>(integer(j, "degree")) : 0;
    if (j.contains("elements")) {
      std::vector<Permutation> perms;
      for (const auto& p : array(j, "elements")) perms.push_back(permutation_from_json(p, degree));
      return GroupTable::from_permutations(std::move(perms), name);
    }
    if (j.contains("generators")) {
      std::vector<Permutation> gens;
      for (const auto& p : array(j, "generators")) gens.push_back(permutation_from_json(p, degree));
      const auto limit = j.contains("limit") ? static_cast<std::size_t>(integer(j, "limit")) : std::size_t{2520};
      auto g = build_group_from_generators(gens, limit, degree);
      std::vector<Permutation> perms;
      for (int e = 0; e < static_cast<int>(g.order()); ++e) perms.push_back(g.permutation(e));
      return GroupTable::from_permutations(std::move(perms), name);
    }
    if (j.contains("table")) {
      const auto& rows = array(j, "table");
      const std::size_t n = rows.size();
      std::vector<int> flat;
      for (const auto& r : rows) {
        if (!r.is_array() || r.size() != n) throw InputError("multiplication table must be square");
        for (const auto& x : r) flat.push_back(x.get<int>());
      }
      std::vector<std::string> labels;
      if (j.contains("labels"))
        for (const auto& l : array(j, "labels")) labels.push_back(l.get<std::string>());
      return GroupTable::from_table(std::move(flat), n, std::move(labels), name);
    }
  } catch (const InputError&) {
    throw;
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
  throw InputError("group needs one of builtin, family, elements, generators or table");
}

Json group_to_json(const GroupTable& g) {
  Json out{{"name", g.name()}, {"order", g.order()}};
  if (g.has_permutations()) {
    out["degree"] = g.degree();
    Json elems = Json::array();
    for (int e = 0; e < static_cast<int>(g.order()); ++e) elems.push_back(g.permutation(e));
    out["elements"] = elems;
  } else {
    Json labels = Json::array(), table = Json::array();
    for (int a = 0; a < static_cast<int>(g.order()); ++a) {
      labels.push_back(g.label(a));
      Json row = Json::array();
      for (int b = 0; b < static_cast<int>(g.order()); ++b) row.push_back(g.mul(a, b));
      table.push_back(row);
    }
    out["labels"] = labels;
    out["table"] = table;
  }
  return out;
}

Json classes_to_json(const GroupTable& g, const ClassPartition& p) {
  Json out = Json::array();
  for (std::size_t c = 0; c < p.count(); ++c) {
    Json members = Json::array();
    for (int e : p.classes[c]) members.push_back(g.label(e));
    out.push_back(Json{{"index", c},
                       {"symbol", class_symbol(c)},
                       {"size", p.sizes[c]},
                       {"representative", g.label(p.representative(static_cast<int>(c)))},
                       {"element_order", p.class_element_order[c]},
                       {"inverse_class", p.inverse_class[c]},
                       {"members", members}});
  }
  return out;
}

Json class_algebra_to_json(const ClassAlgebra& a) {
  const std::size_t r = a.rank();
  Json constants = Json::array();
  for (std::size_t l = 0; l < r; ++l) {
    Json plane = Json::array();
    for (std::size_t m = 0; m < r; ++m) {
      Json row = Json::array();
      for (std::size_t n = 0; n < r; ++n) row.push_back(a.c(l, m, n));
      plane.push_back(row);
    }
    constants.push_back(plane);
  }
  Json symbols = Json::array();
  for (std::size_t l = 0; l < r; ++l) symbols.push_back(class_symbol(l));
  return Json{{"group", group_to_json(a.group())},
              {"symbols", symbols},
              {"sizes", a.partition().sizes},
              {"constants", constants},
              {"relations", relation_strings(a)}};
}

ClassAlgebra class_algebra_from_json(const Json& j) {
  auto g = std::make_shared<const GroupTable>(group_from_json(field(j, "group")));
  auto partition = conjugacy_classes(*g);
  const std::size_t r = partition.count();
  const auto& planes = array(j, "constants");
  if (planes.size() != r) throw InputError("constants do not match the class count");
  std::vector<long long> flat;
  for (const auto& plane : planes) {
    if (!plane.is_array() || plane.size() != r) throw InputError("constants must be rank^3");
    for (const auto& row : plane) {
      if (!row.is_array() || row.size() != r) throw InputError("constants must be rank^3");
      for (const auto& x : row) flat.push_back(x.get<long long>());
    }
  }
  return ClassAlgebra(g, std::move(partition), std::move(flat));
}

Json points_to_json(const PointTable& t) {
  Json pts = Json::array();
  for (const auto& p : t.points) pts.push_back(scalars_to_json(p));
  return Json{{"field", t.field.name()}, {"prime", std::to_string(t.prime)}, {"points", pts}};
}

PointTable points_from_json(const Json& j) {
  PointTable t;
  t.field = field_of(j);
  t.prime = static_cast<std::uint64_t>(integer(j, "prime"));
  for (const auto& p : array(j, "points")) t.points.push_back(scalars_from_json(p, t.field));
  return t;
}

Json idempotents_to_json(const std::vector<CentralIdempotent>& system, const FieldContext& f) {
  Json items = Json::array();
  for (const auto& e : system)
    items.push_back(Json{{"coeffs", scalars_to_json(e.coeffs)}, {"point", scalars_to_json(e.point)}, {"dim", e.dim}});
  return Json{{"field", f.name()}, {"items", items}};
}

std::vector<CentralIdempotent> idempotents_from_json(const Json& j) {
  const auto f = field_of(j);
  std::vector<CentralIdempotent> out;
  for (const auto& item : array(j, "items")) {
    CentralIdempotent e;
    e.coeffs = scalars_from_json(field(item, "coeffs"), f);
    e.point = scalars_from_json(field(item, "point"), f);
    e.dim = static_cast<int>(integer(item, "dim"));
    out.push_back(std::move(e));
  }
  return out;
}

Json character_table_to_json(const CharacterTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows) rows.push_back(scalars_to_json(r));
  return Json{{"field", t.field.name()}, {"dims", t.dims}, {"class_sizes", t.class_sizes}, {"rows", rows}};
}

CharacterTable character_table_from_json(const Json& j) {
  CharacterTable t;
  t.field = field_of(j);
  t.dims = field(j, "dims").get<std::vector<int>>();
  t.class_sizes = field(j, "class_sizes").get<std::vector<std::size_t>>();
  for (const auto& r : array(j, "rows")) t.rows.push_back(scalars_from_json(r, t.field));
  return t;
}

Json representation_to_json(const RepMatrices& rep) {
  Json mats = Json::array();
  for (const auto& m : rep.matrices) mats.push_back(matrix_to_json(m));
  return Json{{"field", rep.field.name()},
              {"dimension", rep.dimension},
              {"basis", matrix_to_json(rep.basis)},
              {"matrices", mats}};
}

RepMatrices representation_from_json(const Json& j) {
  RepMatrices rep;
  rep.field = field_of(j);
  rep.dimension = static_cast<std::size_t>(integer(j, "dimension"));
  rep.basis = matrix_from_json(field(j, "basis"), rep.field);
  for (const auto& m : array(j, "matrices")) {
    auto mat = matrix_from_json(m, rep.field);
    if (mat.rows() != rep.dimension || mat.cols() != rep.dimension) throw InputError("matrix of the wrong size");
    rep.matrices.push_back(std::move(mat));
  }
  return rep;
}

Json tensor_to_json(const TensorArray& t) {
  Json out{{"d", t.d}, {"n", t.n}};
  const auto& f = t.entries.front().context();
  if (!(f == FieldContext::rationals())) out["field"] = f.name();
  out["entries"] = scalars_to_json(t.entries);
  return out;
}

TensorArray tensor_from_json(const Json& j) {
  const auto f = j.contains("field") ? field_of(j) : FieldContext::rationals();
  const int d = static_cast<int>(integer(j, "d"));
  const int n = static_cast<int>(integer(j, "n"));
  auto t = TensorArray::zeros(d, n, f);
  auto entries = scalars_from_json(array(j, "entries"), f);
  if (entries.size() != t.entries.size())
    throw InputError("expected " + std::to_string(t.entries.size()) + " entries, got " + std::to_string(entries.size()));
  t.entries = std::move(entries);
  return t;
}

Json report_to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"ok", r.ok()}, {"checks", checks}};
}

VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  for (const auto& c : array(j, "checks")) r.add(text(c, "name"), field(c, "passed").get<bool>(), text(c, "detail"));
  return r;
}

Json document(const std::string& kind) { return Json{{"schema_version", kSchemaVersion}, {"kind", kind}}; }

namespace {

Json reparse(Json obj, std::optional<GroupTable>& group) {
  if (!obj.is_object()) return obj;
  for (auto& [key, value] : obj.items()) {
    if (key == "group") {
      group = group_from_json(value);
      value = group_to_json(*group);
    } else if (key == "classes") {
      if (!group) throw InputError("classes without a group");
      value = classes_to_json(*group, conjugacy_classes(*group));
    } else if (key == "class_algebra") {
      value = class_algebra_to_json(class_algebra_from_json(value));
    } else if (key == "points") {
      value = points_to_json(points_from_json(value));
    } else if (key == "idempotents") {
      const auto f = field_of(value);
      value = idempotents_to_json(idempotents_from_json(value), f);
    } else if (key == "character_table") {
      value = character_table_to_json(character_table_from_json(value));
    } else if (key == "representation") {
      value = representation_to_json(representation_from_json(value));
    } else if (key == "tensor") {
      value = tensor_to_json(tensor_from_json(value));
    } else if (key == "report") {
      value = report_to_json(report_from_json(value));
    } else if (value.is_array()) {
      for (auto& item : value) item = reparse(item, group);
    }
  }
  return obj;
}

}  // namespace

Json roundtrip(const Json& doc) {
  if (!doc.is_object()) throw InputError("document must be an object");
  if (integer(doc, "schema_version") != kSchemaVersion) throw InputError("unsupported schema_version");
  text(doc, "kind");
  try {
    std::optional<GroupTable> group;
    return reparse(doc, group);
  } catch (const Json::exception& e) {
    throw InputError(e.what());
  }
}

}  // namespace centerpoint
