#include "centerpoint/class_algebra.hpp"

#include "centerpoint/errors.hpp"

namespace centerpoint {

ClassAlgebra::ClassAlgebra(std::shared_ptr<const GroupTable> group, ClassPartition partition,
                           std::vector<long long> constants)
    : group_(std::move(group)), partition_(std::move(partition)), c_(std::move(constants)) {}

Matrix ClassAlgebra::mult_matrix(std::size_t lambda, const FieldContext& ctx) const {
  const std::size_t r = rank();
  Matrix m(r, r, ctx);
  for (std::size_t mu = 0; mu < r; ++mu)
    for (std::size_t nu = 0; nu < r; ++nu)
      if (const auto v = c(lambda, mu, nu)) m(nu, mu) = ctx.from_integer(v);
  return m;
}

std::vector<Scalar> ClassAlgebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  const std::size_t r = rank();
  if (x.size() != r || y.size() != r) throw ContextMismatch("central element has wrong length");
  const FieldContext& ctx = x.front().context();
  std::vector<Scalar> out(r, ctx.zero());
  for (std::size_t l = 0; l < r; ++l) {
    if (x[l].is_zero()) continue;
    for (std::size_t m = 0; m < r; ++m) {
      if (y[m].is_zero()) continue;
      const Scalar xy = x[l] * y[m];
      for (std::size_t n = 0; n < r; ++n)
        if (const auto v = c(l, m, n)) out[n] += xy.scaled(v);
    }
  }
  return out;
}

std::vector<Scalar> ClassAlgebra::unit(const FieldContext& ctx) const {
  std::vector<Scalar> u(rank(), ctx.zero());
  u[0] = ctx.one();
  return u;
}

ClassAlgebra structure_constants(std::shared_ptr<const GroupTable> group, ClassPartition partition) {
  const std::size_t r = partition.count();
  std::vector<long long> c(r * r * r, 0);
  // For g0 in nu, c[lambda][mu][nu] counts x in lambda with x^-1 g0 in mu.
  for (std::size_t nu = 0; nu < r; ++nu) {
    const int g0 = partition.representative(static_cast<int>(nu));
    for (std::size_t lambda = 0; lambda < r; ++lambda)
      for (int x : partition.classes[lambda]) {
        const auto mu = static_cast<std::size_t>(partition.class_of[static_cast<std::size_t>(group->mul(group->inv(x), g0))]);
        ++c[(lambda * r + mu) * r + nu];
      }
  }
  return ClassAlgebra(std::move(group), std::move(partition), std::move(c));
}

ClassAlgebra structure_constants(const GroupTable& group) {
  auto g = std::make_shared<const GroupTable>(group);
  auto cp = conjugacy_classes(*g);
  return structure_constants(std::move(g), std::move(cp));
}

bool center_membership_check(const GroupTable& group, const ClassPartition& partition,
                             std::span<const Scalar> element) {
  if (element.size() != group.order()) throw ContextMismatch("element length must equal the group order");
  for (const auto& cls : partition.classes)
    for (int g : cls)
      if (!(element[static_cast<std::size_t>(g)] == element[static_cast<std::size_t>(cls.front())])) return false;
  return true;
}

std::string class_symbol(std::size_t cls) {
  static const char* const greek[] = {"α", "β", "γ", "δ", "ε", "ζ", "η", "θ", "ι", "κ", "μ", "ν",
                                      "ξ", "π", "ρ", "σ", "τ", "φ", "χ", "ψ", "ω"};
  if (cls == 0) return "1";
  if (cls - 1 < std::size(greek)) return greek[cls - 1];
  return "c" + std::to_string(cls);
}

std::vector<std::string> relation_strings(const ClassAlgebra& algebra) {
  std::vector<std::string> out;
  const std::size_t r = algebra.rank();
  for (std::size_t l = 1; l < r; ++l)
    for (std::size_t m = l; m < r; ++m) {
      std::string lhs = l == m ? class_symbol(l) + "²" : class_symbol(l) + class_symbol(m);
      std::string rhs;
      for (std::size_t n = 0; n < r; ++n) {
        const long long v = algebra.c(l, m, n);
        if (v == 0) continue;
        if (!rhs.empty()) rhs += " + ";
        if (n == 0)
          rhs += std::to_string(v);
        else
          rhs += (v == 1 ? "" : std::to_string(v)) + class_symbol(n);
      }
      out.push_back(lhs + " = " + (rhs.empty() ? "0" : rhs));
    }
  return out;
}

}  // namespace centerpoint
