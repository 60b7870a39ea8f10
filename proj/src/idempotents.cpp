#include "centerpoint/idempotents.hpp"

#include <random>

#include "centerpoint/errors.hpp"

namespace centerpoint {

Matrix point_matrix(const PointTable& points) {
  const std::size_t r = points.size();
  Matrix a(r, r, points.field);
  for (std::size_t i = 0; i < r; ++i) {
    if (points.points[i].size() != r) throw SingularMatrix("point table is not square");
    for (std::size_t j = 0; j < r; ++j) a(i, j) = points.points[i][j];
  }
  return a;
}

int dimension_of(std::span<const Scalar> coeffs, const GroupTable& group) {
  if (coeffs.empty()) throw NotAPerfectSquare("empty coefficient vector");
  const Scalar& c0 = coeffs[0];
  Rational sq;
  if (c0.context().kind() == FieldKind::PrimeField) {
    const auto p = c0.context().modulus();
    const auto r = mul_mod(c0.residue(), group.order() % p, p);
    const Integer bound(static_cast<unsigned long>(group.order()));
    const Integer pz(static_cast<unsigned long>(p));
    if (2 * bound * bound >= pz) throw NotAPerfectSquare("modulus too small to recover the dimension");
    auto q = rational_reconstruct(Integer(static_cast<unsigned long>(r)), pz, bound);
    if (!q) throw NotAPerfectSquare("dimension does not reconstruct modulo " + std::to_string(p));
    sq = *q;
  } else {
    if (!c0.is_rational()) throw NotAPerfectSquare("identity coefficient " + c0.to_string() + " is not rational");
    sq = c0.to_rational() * static_cast<long>(group.order());
  }
  if (sq.get_den() != 1 || sq <= 0) throw NotAPerfectSquare(sq.get_str() + " is not a positive integer");
  const Integer n = sq.get_num();
  const Integer root = sqrt(n);
  if (root * root != n) throw NotAPerfectSquare(n.get_str() + " is not a perfect square");
  return static_cast<int>(root.get_si());
}

std::vector<CentralIdempotent> idempotents_from_points(const PointTable& points, const ClassAlgebra& algebra) {
  if (points.size() != algebra.rank()) throw SingularMatrix("point count differs from class count");
  auto a_inv = inverse(point_matrix(points));
  if (!a_inv) throw SingularMatrix("point matrix is singular");
  const Matrix b = a_inv->transpose();
  std::vector<CentralIdempotent> out;
  for (std::size_t v = 0; v < points.size(); ++v) {
    CentralIdempotent e;
    e.coeffs = b.row_vector(v);
    e.point = points.points[v];
    e.dim = dimension_of(e.coeffs, algebra.group());
    out.push_back(std::move(e));
  }
  return out;
}

CharacterTable character_table(const PointTable& points, const std::vector<int>& dims,
                               const ClassPartition& partition) {
  if (dims.size() != points.size()) throw ContextMismatch("one dimension per point required");
  CharacterTable t;
  t.field = points.field;
  t.dims = dims;
  t.class_sizes = partition.sizes;
  const bool char0 = points.field.characteristic() == 0;
  for (std::size_t v = 0; v < points.size(); ++v) {
    std::vector<Scalar> row;
    for (std::size_t l = 0; l < partition.count(); ++l) {
      Scalar chi = points.points[v][l].scaled(dims[v]) /
                   points.field.from_integer(static_cast<long long>(partition.sizes[l]));
      if (char0 && !chi.is_algebraic_integer())
        throw NonIntegralCharacter("character value " + chi.to_string() + " is not an algebraic integer");
      row.push_back(std::move(chi));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

VerificationReport verify_idempotent_system(const std::vector<CentralIdempotent>& system,
                                            const ClassAlgebra& algebra) {
  VerificationReport rep;
  if (system.empty()) {
    rep.add("nonempty", false, "no idempotents");
    return rep;
  }
  const auto& field = system.front().coeffs.front().context();
  const auto unit = algebra.unit(field);
  std::vector<Scalar> sum(algebra.rank(), field.zero());
  long long dim_sq = 0;
  bool idem = true, orth = true;
  std::string idem_detail, orth_detail;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& b = system[i].coeffs;
    for (std::size_t l = 0; l < sum.size(); ++l) sum[l] += b[l];
    dim_sq += static_cast<long long>(system[i].dim) * system[i].dim;
    if (algebra.multiply(b, b) != b) {
      idem = false;
      idem_detail = "idempotent " + std::to_string(i) + " does not square to itself";
    }
    for (std::size_t j = i + 1; j < system.size(); ++j) {
      const auto prod = algebra.multiply(b, system[j].coeffs);
      for (const auto& x : prod)
        if (!x.is_zero()) {
          orth = false;
          orth_detail = "idempotents " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal";
          break;
        }
    }
  }
  // Class-sum coordinates are central by construction; only the length can be wrong.
  bool central = true;
  for (const auto& e : system) central = central && e.coeffs.size() == algebra.rank();
  rep.add("central", central);
  rep.add("idempotent", idem, idem_detail);
  rep.add("orthogonal", orth, orth_detail);
  rep.add("partition of unity", sum == unit);
  rep.add("count", system.size() == algebra.rank(),
          std::to_string(system.size()) + " idempotents for " + std::to_string(algebra.rank()) + " classes");
  rep.add("sum of squared dimensions", dim_sq == static_cast<long long>(algebra.group().order()),
          "sum is " + std::to_string(dim_sq));
  return rep;
}

VerificationReport verify_character_orthogonality(const CharacterTable& table, const ClassPartition& partition,
                                                  std::size_t group_order) {
  VerificationReport rep;
  const auto& f = table.field;
  const Scalar inv_order = f.from_integer(static_cast<long long>(group_order)).inverse();
  bool ok = true;
  std::string detail;
  for (std::size_t v = 0; v < table.rows.size(); ++v) {
    if (!(table.rows[v][0] == f.from_integer(table.dims[v]))) {
      ok = false;
      detail = "row " + std::to_string(v) + " identity value differs from dimension";
    }
    for (std::size_t w = 0; w < table.rows.size(); ++w) {
      Scalar s = f.zero();
      for (std::size_t l = 0; l < partition.count(); ++l)
        s += (table.rows[v][static_cast<std::size_t>(partition.inverse_class[l])] * table.rows[w][l])
                 .scaled(static_cast<long long>(partition.sizes[l]));
      s *= inv_order;
      if (!(s == (v == w ? f.one() : f.zero()))) {
        ok = false;
        detail = "rows " + std::to_string(v) + " and " + std::to_string(w) + " give " + s.to_string();
      }
    }
  }
  rep.add("row orthogonality", ok, detail);
  return rep;
}

std::string class_variable(std::size_t lambda) {
  static const char* const names[] = {"x", "y", "z", "w"};
  if (lambda >= 1 && lambda <= 4) return names[lambda - 1];
  return "x" + std::to_string(lambda);
}

namespace {

std::string render_affine(const std::vector<Scalar>& coeffs) {
  std::string out;
  auto term = [&out](const Scalar& c, const std::string& var) {
    if (c.is_zero()) return;
    std::string cs = c.to_string();
    bool negative = false;
    if (c.is_rational() && c.to_rational() < 0) {
      negative = true;
      cs = (-c).to_string();
    }
    const bool compound = cs.find_first_of("+ ") != std::string::npos;
    if (compound) cs = "(" + cs + ")";
    std::string body = var.empty() ? cs : (cs == "1" ? var : cs + "*" + var);
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += negative ? " - " + body : " + " + body;
  };
  for (std::size_t l = 1; l < coeffs.size(); ++l) term(coeffs[l], class_variable(l));
  term(coeffs[0], "");
  return out.empty() ? "0" : out;
}

}  // namespace

SeparatingElement separating_element(const PointTable& points, std::size_t v, std::uint64_t seed) {
  const std::size_t m = points.size();
  if (m < 2) throw InputError("separation needs at least two points");
  if (v >= m) throw InputError("point index out of range");
  const auto& f = points.field;
  const auto& a = points.points[v];
  const std::size_t r = a.size();

  auto evaluate = [&](const std::vector<Scalar>& coeffs) {
    std::vector<Scalar> vals;
    for (const auto& pt : points.points) {
      Scalar s = coeffs[0];
      for (std::size_t l = 1; l < r; ++l)
        if (!coeffs[l].is_zero()) s += coeffs[l] * pt[l];
      vals.push_back(std::move(s));
    }
    return vals;
  };
  auto separates = [&](const std::vector<Scalar>& vals) {
    for (std::size_t w = 0; w < m; ++w)
      if (w != v && vals[w].is_zero()) return false;
    return vals[v].is_zero();
  };

  std::vector<std::size_t> order;
  for (std::size_t l = 1; l < r; ++l)
    if (!a[l].is_zero()) order.push_back(l);
  for (std::size_t l = 1; l < r; ++l)
    if (a[l].is_zero()) order.push_back(l);
  for (auto l : order) {
    std::vector<Scalar> coeffs(r, f.zero());
    coeffs[l] = f.one();
    coeffs[0] = -a[l];
    auto vals = evaluate(coeffs);
    if (separates(vals)) {
      SeparatingElement s{coeffs, vals, render_affine(coeffs), static_cast<int>(l)};
      return s;
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (;;) {
    std::vector<Scalar> coeffs(r, f.zero());
    for (std::size_t l = 1; l < r; ++l) coeffs[l] = f.from_integer(dist(rng));
    Scalar c = f.zero();
    for (std::size_t l = 1; l < r; ++l) c -= coeffs[l] * a[l];
    coeffs[0] = c;
    auto vals = evaluate(coeffs);
    if (separates(vals)) return SeparatingElement{coeffs, vals, render_affine(coeffs), -1};
  }
}

std::vector<Scalar> expand_to_group_basis(std::span<const Scalar> class_coeffs, const ClassPartition& partition) {
  if (class_coeffs.size() != partition.count()) throw ContextMismatch("class coefficient vector has wrong length");
  std::vector<Scalar> out(partition.class_of.size());
  for (std::size_t g = 0; g < out.size(); ++g) out[g] = class_coeffs[static_cast<std::size_t>(partition.class_of[g])];
  return out;
}

}  // namespace centerpoint
