#include "centerpoint/regular_rep.hpp"

#include <algorithm>
#include <random>

#include "centerpoint/errors.hpp"

namespace centerpoint {

namespace {

void require_shape(const GroupTable& group, const AlgebraElement& a) {
  if (a.size() != group.order())
    throw ContextMismatch("element has " + std::to_string(a.size()) + " coefficients for a group of order " +
                          std::to_string(group.order()));
}

std::vector<std::size_t> echelon_pivots(const Matrix& e) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    std::size_t c = 0;
    while (c < e.cols() && e(r, c).is_zero()) ++c;
    pivots.push_back(c);
  }
  return pivots;
}

// Coordinates of v in the reduced echelon basis e, or nullopt outside its span.
std::optional<std::vector<Scalar>> echelon_coordinates(const Matrix& e, const std::vector<std::size_t>& pivots,
                                                       std::span<const Scalar> v) {
  std::vector<Scalar> coords;
  coords.reserve(e.rows());
  for (auto p : pivots) coords.push_back(v[p]);
  for (std::size_t c = 0; c < e.cols(); ++c) {
    Scalar s = e.context().zero();
    for (std::size_t r = 0; r < e.rows(); ++r)
      if (!coords[r].is_zero() && !e(r, c).is_zero()) s += coords[r] * e(r, c);
    if (!(s == v[c])) return std::nullopt;
  }
  return coords;
}

Matrix rows_of(const std::vector<AlgebraElement>& elems, std::size_t width, const FieldContext& ctx) {
  Matrix m(elems.size(), width, ctx);
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) m(r, c) = elems[r].coeffs[c];
  return m;
}

std::vector<AlgebraElement> elements_of(const Matrix& rows) {
  std::vector<AlgebraElement> out;
  for (std::size_t r = 0; r < rows.rows(); ++r) out.push_back({rows.row_vector(r)});
  return out;
}

// e_g x, a relabelling of coefficients.
AlgebraElement left_translate(const GroupTable& group, int g, const AlgebraElement& x) {
  AlgebraElement out{std::vector<Scalar>(x.size(), x.context().zero())};
  for (std::size_t h = 0; h < x.size(); ++h) out.coeffs[static_cast<std::size_t>(group.mul(g, static_cast<int>(h)))] = x.coeffs[h];
  return out;
}

std::size_t exact_sqrt(std::size_t dim) {
  std::size_t n = 0;
  while ((n + 1) * (n + 1) <= dim) ++n;
  if (n * n != dim) throw NotAPerfectSquare("component dimension " + std::to_string(dim) + " is not a square");
  return n;
}

std::vector<Scalar> unit_list(const FieldContext& ctx) {
  std::vector<Scalar> raw;
  switch (ctx.kind()) {
    case FieldKind::Rational:
      raw = {ctx.one(), -ctx.one()};
      break;
    case FieldKind::PrimeField:
      for (long long k = 1; k <= 4 && static_cast<std::uint64_t>(k) < ctx.modulus(); ++k) {
        raw.push_back(ctx.from_integer(k));
        raw.push_back(ctx.from_integer(-k));
      }
      break;
    case FieldKind::Cyclotomic:
      for (int k = 0; k < ctx.conductor(); ++k) {
        raw.push_back(ctx.zeta(k));
        raw.push_back(-ctx.zeta(k));
      }
      break;
  }
  std::vector<Scalar> out;
  for (auto& u : raw) {
    bool seen = false;
    for (const auto& v : out) seen = seen || v == u;
    if (!seen) out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

AlgebraElement AlgebraElement::zero(const GroupTable& group, const FieldContext& ctx) {
  return {std::vector<Scalar>(group.order(), ctx.zero())};
}

AlgebraElement AlgebraElement::basis(const GroupTable& group, int g, const FieldContext& ctx) {
  auto a = zero(group, ctx);
  a.coeffs[static_cast<std::size_t>(g)] = ctx.one();
  return a;
}

AlgebraElement AlgebraElement::total(const GroupTable& group, const FieldContext& ctx) {
  return {std::vector<Scalar>(group.order(), ctx.one())};
}

bool AlgebraElement::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (o.size() != size()) throw ContextMismatch("group algebra elements of different length");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (o.size() != size()) throw ContextMismatch("group algebra elements of different length");
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

AlgebraElement operator*(const Scalar& s, AlgebraElement a) {
  for (auto& c : a.coeffs) c *= s;
  return a;
}

AlgebraElement change_field(const AlgebraElement& a, const FieldContext& ctx) {
  AlgebraElement out;
  out.coeffs.reserve(a.size());
  for (const auto& c : a.coeffs) out.coeffs.push_back(embed_scalar(c, ctx));
  return out;
}

AlgebraElement algebra_multiply(const GroupTable& group, const AlgebraElement& a, const AlgebraElement& b) {
  require_shape(group, a);
  require_shape(group, b);
  if (!(a.context() == b.context())) throw ContextMismatch("group algebra elements over different fields");
  auto out = AlgebraElement::zero(group, a.context());
  for (std::size_t g = 0; g < a.size(); ++g) {
    if (a.coeffs[g].is_zero()) continue;
    for (std::size_t h = 0; h < b.size(); ++h) {
      if (b.coeffs[h].is_zero()) continue;
      out.coeffs[static_cast<std::size_t>(group.mul(static_cast<int>(g), static_cast<int>(h)))] +=
          a.coeffs[g] * b.coeffs[h];
    }
  }
  return out;
}

Matrix mult_matrix(const GroupTable& group, const AlgebraElement& a, Side side) {
  require_shape(group, a);
  const std::size_t n = group.order();
  Matrix m(n, n, a.context());
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      if (a.coeffs[g].is_zero()) continue;
      const int gi = static_cast<int>(g), hi = static_cast<int>(h);
      const int row = side == Side::Left ? group.mul(gi, hi) : group.mul(hi, gi);
      m(static_cast<std::size_t>(row), h) += a.coeffs[g];
    }
  return m;
}

std::vector<AlgebraElement> component_basis(const GroupTable& group, const AlgebraElement& beta) {
  require_shape(group, beta);
  const std::size_t n = group.order();
  // Row h is beta e_h.
  Matrix images(n, n, beta.context());
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g)
      images(h, static_cast<std::size_t>(group.mul(static_cast<int>(g), static_cast<int>(h)))) = beta.coeffs[g];
  return elements_of(row_space_basis(images));
}

std::vector<Scalar> coordinates_in(const std::vector<AlgebraElement>& basis, const AlgebraElement& x) {
  if (basis.empty()) {
    if (!x.is_zero()) throw NotInComponent("nonzero element of the zero space");
    return {};
  }
  const Matrix e = rows_of(basis, x.size(), x.context());
  auto coords = echelon_coordinates(e, echelon_pivots(e), x.coeffs);
  if (!coords) throw NotInComponent("element is outside the span");
  return *coords;
}

Matrix right_mult_matrix(const GroupTable& group, const std::vector<AlgebraElement>& basis,
                         const AlgebraElement& alpha) {
  const std::size_t k = basis.size();
  Matrix m(k, k, alpha.context());
  if (k == 0) return m;
  const Matrix e = rows_of(basis, alpha.size(), alpha.context());
  const auto pivots = echelon_pivots(e);
  for (std::size_t j = 0; j < k; ++j) {
    const auto image = algebra_multiply(group, basis[j], alpha);
    auto coords = echelon_coordinates(e, pivots, image.coeffs);
    if (!coords) throw NotInComponent("right multiplication leaves the span");
    for (std::size_t i = 0; i < k; ++i) m(i, j) = (*coords)[i];
  }
  return m;
}

std::size_t right_mult_rank(const GroupTable& group, const AlgebraElement& beta, const AlgebraElement& alpha) {
  if (!(algebra_multiply(group, beta, alpha) == alpha)) throw NotInComponent("beta * alpha differs from alpha");
  return rank(right_mult_matrix(group, component_basis(group, beta), alpha));
}

std::size_t component_side(const GroupTable& group, const AlgebraElement& beta) {
  return exact_sqrt(component_basis(group, beta).size());
}

std::size_t element_rank(const GroupTable& group, const AlgebraElement& beta, const AlgebraElement& alpha) {
  const std::size_t n = component_side(group, beta);
  const std::size_t r = right_mult_rank(group, beta, alpha);
  if (r % n != 0)
    throw RankMismatch("right multiplication rank " + std::to_string(r) + " is not a multiple of " +
                       std::to_string(n));
  return r / n;
}

std::optional<SplittingWitness> find_splitting_witness(const GroupTable& group, const AlgebraElement& beta,
                                                       const FieldContext& ctx, std::uint64_t seed,
                                                       std::size_t budget) {
  const auto b = change_field(beta, ctx);
  const auto basis = component_basis(group, b);
  const std::size_t dim = basis.size();
  const std::size_t n = exact_sqrt(dim);
  std::vector<Matrix> pieces;
  for (const auto& v : basis) pieces.push_back(right_mult_matrix(group, basis, v));

  std::size_t trials = 0;
  auto attempt = [&](const std::vector<Scalar>& x) -> std::optional<SplittingWitness> {
    ++trials;
    Matrix m(dim, dim, ctx);
    bool nonzero = false;
    for (std::size_t k = 0; k < dim; ++k)
      if (!x[k].is_zero()) {
        m = m + x[k] * pieces[k];
        nonzero = true;
      }
    if (!nonzero) return std::nullopt;
    const std::size_t r = rank(m);
    if (r > n) return std::nullopt;
    auto alpha = AlgebraElement::zero(group, ctx);
    for (std::size_t k = 0; k < dim; ++k)
      if (!x[k].is_zero()) alpha += x[k] * basis[k];
    return SplittingWitness{alpha, x, r, trials};
  };

  const auto units = unit_list(ctx);
  const auto zero = ctx.zero();
  // Structured candidates.
  for (std::size_t size = 1; size <= 3 && size <= dim; ++size) {
    std::vector<std::size_t> idx(size);
    // Reverse colexicographic: largest top index first.
    std::vector<std::vector<std::size_t>> subsets;
    auto rec = [&](auto& self, std::size_t pos, std::size_t start) -> void {
      if (pos == size) {
        subsets.push_back(idx);
        return;
      }
      for (std::size_t v = start; v < dim; ++v) {
        idx[pos] = v;
        self(self, pos + 1, v + 1);
      }
    };
    rec(rec, 0, 0);
    std::sort(subsets.begin(), subsets.end(), [](const auto& l, const auto& r) {
      return std::lexicographical_compare(l.rbegin(), l.rend(), r.rbegin(), r.rend(),
                                          [](std::size_t a, std::size_t c) { return a > c; });
    });
    const std::size_t free = size - 1;
    std::size_t combos = 1;
    for (std::size_t f = 0; f < free; ++f) combos *= units.size();
    for (const auto& s : subsets)
      for (std::size_t c = 0; c < combos; ++c) {
        if (trials >= budget) return std::nullopt;
        std::vector<Scalar> x(dim, zero);
        x[s[0]] = ctx.one();
        std::size_t code = c;
        std::vector<std::size_t> digits(free);
        for (std::size_t f = free; f-- > 0;) {
          digits[f] = code % units.size();
          code /= units.size();
        }
        for (std::size_t f = 0; f < free; ++f) x[s[f + 1]] = units[digits[f]];
        if (auto w = attempt(x)) return w;
      }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> height(-2, 2);
  std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
  while (trials < budget) {
    std::vector<Scalar> x(dim, zero);
    for (auto& c : x) c = units[pick(rng)].scaled(height(rng));
    if (auto w = attempt(x)) return w;
  }
  return std::nullopt;
}

RepMatrices extract_irrep(const GroupTable& group, const AlgebraElement& beta, const AlgebraElement& witness) {
  if (!(algebra_multiply(group, beta, witness) == witness))
    throw NotInComponent("witness is outside beta K(G)");
  const auto& ctx = witness.context();
  const auto basis = component_basis(group, beta);
  const std::size_t n = exact_sqrt(basis.size());
  std::vector<AlgebraElement> products;
  for (const auto& v : basis) products.push_back(algebra_multiply(group, v, witness));
  const Matrix w = row_space_basis(rows_of(products, group.order(), ctx));
  if (w.rows() != n)
    throw RankMismatch("witness has right multiplication rank " + std::to_string(w.rows()) + ", expected " +
                       std::to_string(n));
  const auto pivots = echelon_pivots(w);
  RepMatrices rep;
  rep.dimension = n;
  rep.field = ctx;
  rep.basis = w;
  const auto wrows = elements_of(w);
  for (int g = 0; g < static_cast<int>(group.order()); ++g) {
    Matrix m(n, n, ctx);
    for (std::size_t k = 0; k < n; ++k) {
      auto coords = echelon_coordinates(w, pivots, left_translate(group, g, wrows[k]).coeffs);
      if (!coords) throw NotInvariant("left ideal is not closed under the group");
      for (std::size_t i = 0; i < n; ++i) m(i, k) = (*coords)[i];
    }
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

VerificationReport verify_representation(const RepMatrices& rep, const GroupTable& group) {
  VerificationReport report;
  if (rep.matrices.size() != group.order()) {
    report.add("matrix count", false,
               std::to_string(rep.matrices.size()) + " matrices for order " + std::to_string(group.order()));
    return report;
  }
  report.add("identity", rep(0) == Matrix::identity(rep.dimension, rep.field));
  bool hom = true;
  std::string detail;
  for (int g = 0; g < static_cast<int>(group.order()) && hom; ++g)
    for (int h = 0; h < static_cast<int>(group.order()); ++h)
      if (!(rep(g) * rep(h) == rep(group.mul(g, h)))) {
        hom = false;
        detail = "fails at (" + group.label(g) + ", " + group.label(h) + ")";
        break;
      }
  report.add("homomorphism", hom, detail);
  return report;
}

Matrix apply_tilde_rho(const AlgebraElement& alpha, const RepMatrices& rep) {
  if (alpha.size() != rep.matrices.size()) throw ContextMismatch("element length differs from the group order");
  Matrix out(rep.dimension, rep.dimension, rep.field);
  for (std::size_t g = 0; g < alpha.size(); ++g)
    if (!alpha.coeffs[g].is_zero()) out = out + alpha.coeffs[g] * rep.matrices[g];
  return out;
}

RepMatrices permutation_representation(const GroupTable& group, const FieldContext& ctx) {
  if (!group.has_permutations()) throw InputError("group " + group.name() + " has no permutation action");
  RepMatrices rep;
  rep.dimension = static_cast<std::size_t>(group.degree());
  rep.field = ctx;
  for (int g = 0; g < static_cast<int>(group.order()); ++g) {
    Matrix m(rep.dimension, rep.dimension, ctx);
    const auto& p = group.permutation(g);
    for (std::size_t i = 0; i < rep.dimension; ++i) m(static_cast<std::size_t>(p[i]), i) = ctx.one();
    rep.matrices.push_back(std::move(m));
  }
  return rep;
}

RepMatrices left_regular_representation(const GroupTable& group, const FieldContext& ctx) {
  RepMatrices rep;
  rep.dimension = group.order();
  rep.field = ctx;
  for (int g = 0; g < static_cast<int>(group.order()); ++g)
    rep.matrices.push_back(mult_matrix(group, AlgebraElement::basis(group, g, ctx), Side::Left));
  return rep;
}

RepMatrices restrict_representation(const RepMatrices& rep, const Matrix& subspace) {
  const Matrix e = row_space_basis(subspace);
  const auto pivots = echelon_pivots(e);
  RepMatrices out;
  out.dimension = e.rows();
  out.field = rep.field;
  out.basis = e;
  for (const auto& g : rep.matrices) {
    Matrix m(out.dimension, out.dimension, rep.field);
    for (std::size_t k = 0; k < e.rows(); ++k) {
      auto coords = echelon_coordinates(e, pivots, g.apply(e.row(k)));
      if (!coords) throw NotInvariant("subspace is not invariant");
      for (std::size_t i = 0; i < out.dimension; ++i) m(i, k) = (*coords)[i];
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

Matrix maschke_complement(const RepMatrices& rep, const Matrix& subspace, std::size_t group_order) {
  const auto& ctx = rep.field;
  const auto p = ctx.characteristic();
  if (p != 0 && group_order % p == 0)
    throw BadCharacteristic("characteristic " + std::to_string(p) + " divides the group order");
  const std::size_t n = rep.dimension;
  const Matrix e = row_space_basis(subspace);
  restrict_representation(rep, e);
  if (e.rows() == n) return Matrix(0, n, ctx);
  // Projector onto the subspace along the coordinate complement of its pivots.
  Matrix proj(n, n, ctx);
  const auto pivots = echelon_pivots(e);
  for (std::size_t k = 0; k < e.rows(); ++k)
    for (std::size_t i = 0; i < n; ++i) proj(i, pivots[k]) = e(k, i);
  Matrix avg(n, n, ctx);
  for (const auto& g : rep.matrices) {
    auto gi = inverse(g);
    if (!gi) throw SingularMatrix("representation matrix is not invertible");
    avg = avg + g * proj * *gi;
  }
  avg = ctx.from_integer(static_cast<long long>(rep.matrices.size())).inverse() * avg;
  Matrix complement = row_space_basis(nullspace(avg));
  restrict_representation(rep, complement);
  Matrix both(n, n, ctx);
  for (std::size_t r = 0; r < e.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) both(r, c) = e(r, c);
  for (std::size_t r = 0; r < complement.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) both(e.rows() + r, c) = complement(r, c);
  if (complement.rows() + e.rows() != n || rank(both) != n)
    throw NotInvariant("averaged projector does not split the space");
  return complement;
}

std::size_t commutant_dimension(const RepMatrices& rep) {
  const std::size_t n = rep.dimension;
  const std::size_t vars = n * n;
  const auto& ctx = rep.field;
  Matrix acc(0, vars, ctx);
  for (const auto& g : rep.matrices) {
    Matrix eq(acc.rows() + vars, vars, ctx);
    for (std::size_t r = 0; r < acc.rows(); ++r)
      for (std::size_t c = 0; c < vars; ++c) eq(r, c) = acc(r, c);
    // (X g - g X)(r, c)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t row = acc.rows() + r * n + c;
        for (std::size_t k = 0; k < n; ++k) {
          eq(row, r * n + k) += g(k, c);
          eq(row, k * n + c) -= g(r, k);
        }
      }
    acc = row_space_basis(eq);
  }
  return vars - acc.rows();
}

}  // namespace centerpoint
