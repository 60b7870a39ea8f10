#include "centerpoint/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "centerpoint/errors.hpp"

namespace centerpoint {

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::fixed_points() const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

int Partition::sign() const { return (total() - static_cast<int>(parts.size())) % 2 == 0 ? 1 : -1; }

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + ")";
}

std::vector<Partition> partitions_of(int d) {
  if (d < 1) throw UnsupportedParameter("partitions need d >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int left, int cap) -> void {
    if (left == 0) {
      out.push_back({cur});
      return;
    }
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, d, d);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts < b.parts; });
  return out;
}

Partition cycle_type(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  Partition out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    out.parts.push_back(len);
  }
  std::sort(out.parts.rbegin(), out.parts.rend());
  return out;
}

std::vector<Partition> class_cycle_types(const GroupTable& group, const ClassPartition& partition) {
  if (!group.has_permutations()) throw InputError("group " + group.name() + " has no permutation action");
  std::vector<Partition> out;
  for (std::size_t c = 0; c < partition.count(); ++c)
    out.push_back(cycle_type(group.permutation(partition.representative(static_cast<int>(c)))));
  return out;
}

std::string to_string(SymmetryKind kind) {
  switch (kind) {
    case SymmetryKind::Symmetric: return "symmetric";
    case SymmetryKind::Alternating: return "alternating";
    case SymmetryKind::Standard: return "standard";
    case SymmetryKind::Other: break;
  }
  return "other";
}

namespace {

int require_full_symmetric(const GroupTable& sd) {
  if (!sd.has_permutations()) throw InputError("expected a symmetric group, got " + sd.name());
  const int d = sd.degree();
  std::size_t fact = 1;
  for (int k = 2; k <= d; ++k) fact *= static_cast<std::size_t>(k);
  if (sd.order() != fact) throw InputError(sd.name() + " is not the full symmetric group on " + std::to_string(d) + " points");
  return d;
}

int fixed_count(const Permutation& p) {
  int f = 0;
  for (std::size_t i = 0; i < p.size(); ++i) f += p[i] == static_cast<int>(i);
  return f;
}

AlgebraElement class_sum(const GroupTable& g, const ClassPartition& partition, std::size_t c, const FieldContext& ctx) {
  auto a = AlgebraElement::zero(g, ctx);
  for (int x : partition.classes[c]) a.coeffs[static_cast<std::size_t>(x)] = ctx.one();
  return a;
}

std::vector<int> sorted_conjugate(const GroupTable& g, const std::vector<int>& members, int s) {
  std::vector<int> out;
  out.reserve(members.size());
  const int si = g.inv(s);
  for (int h : members) out.push_back(g.mul(g.mul(s, h), si));
  std::sort(out.begin(), out.end());
  return out;
}

struct Family {
  std::string name;
  bool signed_char = false;
  bool whole_group = false;
  std::vector<std::vector<int>> conjugates;
  unsigned long long mask = 0;
  std::size_t cost() const { return conjugates.size() * conjugates.front().size(); }
};

std::vector<std::vector<int>> conjugates_of(const GroupTable& sd, const std::vector<Permutation>& gens) {
  const auto sub = build_group_from_generators(gens, sd.order(), sd.degree());
  std::vector<int> members;
  for (int h = 0; h < static_cast<int>(sub.order()); ++h) members.push_back(sd.index_of(sub.permutation(h)));
  std::set<std::vector<int>> seen;
  for (int s = 0; s < static_cast<int>(sd.order()); ++s) seen.insert(sorted_conjugate(sd, members, s));
  return {seen.begin(), seen.end()};
}

std::string term_args(const Permutation& p) {
  std::string s = "F(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ",x" : "x") + std::to_string(p[i] + 1);
  return s + ")";
}

}  // namespace

AlgebraElement closed_form_idempotent(const GroupTable& sd, SymmetryKind kind, const FieldContext& ctx) {
  const int d = require_full_symmetric(sd);
  const auto p = ctx.characteristic();
  if (p != 0 && p <= static_cast<std::uint64_t>(d))
    throw BadCharacteristic("characteristic " + std::to_string(p) + " divides " + std::to_string(d) + "!");
  const Scalar inv_order = ctx.from_integer(static_cast<long long>(sd.order())).inverse();
  auto out = AlgebraElement::zero(sd, ctx);
  for (int s = 0; s < static_cast<int>(sd.order()); ++s) {
    const auto& perm = sd.permutation(s);
    long long w = 0;
    switch (kind) {
      case SymmetryKind::Symmetric: w = 1; break;
      case SymmetryKind::Alternating: w = permutation_sign(perm); break;
      case SymmetryKind::Standard: w = static_cast<long long>(d - 1) * (fixed_count(perm) - 1); break;
      case SymmetryKind::Other: throw InputError("no closed form for this symmetry class");
    }
    out.coeffs[static_cast<std::size_t>(s)] = inv_order.scaled(w);
  }
  return out;
}

SymmetryKind classify_point(const std::vector<Scalar>& point, const GroupTable& sd, const ClassPartition& partition) {
  const int d = require_full_symmetric(sd);
  const auto types = class_cycle_types(sd, partition);
  const auto& ctx = point.front().context();
  auto matches = [&](auto coord) {
    for (std::size_t c = 0; c < partition.count(); ++c)
      if (!(point[c] == coord(c))) return false;
    return true;
  };
  auto size = [&](std::size_t c) { return static_cast<long long>(partition.sizes[c]); };
  if (matches([&](std::size_t c) { return ctx.from_integer(size(c)); })) return SymmetryKind::Symmetric;
  if (matches([&](std::size_t c) { return ctx.from_integer(types[c].sign() * size(c)); }))
    return SymmetryKind::Alternating;
  if (d >= 2 && matches([&](std::size_t c) {
        return ctx.from_integer(size(c) * (types[c].fixed_points() - 1)) / ctx.from_integer(d - 1);
      }))
    return SymmetryKind::Standard;
  return SymmetryKind::Other;
}

TensorArray TensorArray::zeros(int d, int n, const FieldContext& ctx) {
  if (d < 1 || n < 1) throw InputError("tensor needs d >= 1 and n >= 1");
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(n);
  return {d, n, std::vector<Scalar>(count, ctx.zero())};
}

std::size_t TensorArray::index(const std::vector<int>& xs) const {
  if (static_cast<int>(xs.size()) != d) throw ArityMismatch("index tuple of length " + std::to_string(xs.size()));
  std::size_t flat = 0;
  for (int x : xs) flat = flat * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
  return flat;
}

std::vector<int> TensorArray::multi_index(std::size_t flat) const {
  std::vector<int> xs(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    xs[static_cast<std::size_t>(i)] = static_cast<int>(flat % static_cast<std::size_t>(n));
    flat /= static_cast<std::size_t>(n);
  }
  return xs;
}

bool TensorArray::is_zero() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

TensorArray& TensorArray::operator+=(const TensorArray& o) {
  if (o.d != d || o.n != n) throw ArityMismatch("tensor shapes differ");
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += o.entries[i];
  return *this;
}

TensorArray act(const AlgebraElement& alpha, const GroupTable& sd, const TensorArray& t) {
  if (!sd.has_permutations() || sd.degree() != t.d)
    throw ArityMismatch("tensor of arity " + std::to_string(t.d) + " under " + sd.name());
  if (alpha.size() != sd.order()) throw ContextMismatch("element length differs from the group order");
  const auto& ctx = t.entries.front().context();
  auto out = TensorArray::zeros(t.d, t.n, ctx);
  const std::size_t count = t.entries.size();
  std::vector<std::vector<int>> tuples(count);
  for (std::size_t f = 0; f < count; ++f) tuples[f] = t.multi_index(f);
  std::vector<int> ys(static_cast<std::size_t>(t.d));
  for (std::size_t s = 0; s < alpha.size(); ++s) {
    const auto& a = alpha.coeffs[s];
    if (a.is_zero()) continue;
    const auto& p = sd.permutation(static_cast<int>(s));
    for (std::size_t f = 0; f < count; ++f) {
      const auto& xs = tuples[f];
      for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = xs[static_cast<std::size_t>(p[i])];
      const auto& v = t.entries[t.index(ys)];
      if (!v.is_zero()) out.entries[f] += a * v;
    }
  }
  return out;
}

std::vector<TensorArray> decompose_tensor(const TensorArray& t, const GroupTable& sd,
                                          const std::vector<AlgebraElement>& idempotents) {
  std::vector<TensorArray> out;
  for (const auto& b : idempotents) out.push_back(act(b, sd, t));
  return out;
}

bool check_symmetry_class(const TensorArray& t, const GroupTable& sd, const ClassPartition& partition,
                          const std::vector<Scalar>& point) {
  const auto& ctx = t.entries.front().context();
  for (std::size_t c = 1; c < partition.count(); ++c) {
    const auto lhs = act(class_sum(sd, partition, c, ctx), sd, t);
    for (std::size_t f = 0; f < t.entries.size(); ++f)
      if (!(lhs.entries[f] == point[c] * t.entries[f])) return false;
  }
  return true;
}

VerificationReport vanishing_certificates(const std::vector<TensorArray>& components,
                                          const std::vector<SymmetryKind>& kinds, VanishingPattern which) {
  VerificationReport rep;
  if (components.empty() || components.size() != kinds.size()) {
    rep.add("input", false, "one kind per component required");
    return rep;
  }
  const auto& first = components.front();
  auto sum = TensorArray::zeros(first.d, first.n, first.entries.front().context());
  for (std::size_t i = 0; i < components.size(); ++i) {
    const bool skip = kinds[i] == SymmetryKind::Symmetric ||
                      (which == VanishingPattern::Slice && kinds[i] == SymmetryKind::Standard);
    if (!skip) sum += components[i];
  }
  bool ok = true;
  std::string detail;
  const std::size_t d = static_cast<std::size_t>(sum.d);
  for (int x = 0; x < sum.n && ok; ++x) {
    if (which == VanishingPattern::Diagonal) {
      const std::vector<int> xs(d, x);
      if (!sum.at(xs).is_zero()) {
        ok = false;
        detail = "nonzero at x = " + std::to_string(x);
      }
      continue;
    }
    for (int y = 0; y < sum.n && ok; ++y)
      for (std::size_t pos = 0; pos < d; ++pos) {
        std::vector<int> xs(d, x);
        xs[pos] = y;
        if (!sum.at(xs).is_zero()) {
          ok = false;
          detail = "nonzero at x = " + std::to_string(x) + ", y = " + std::to_string(y) + " in slot " +
                   std::to_string(pos + 1);
          break;
        }
      }
  }
  rep.add(which == VanishingPattern::Diagonal ? "diagonal" : "slice", ok, detail);
  return rep;
}

std::pair<long long, long long> fixed_point_sums(int d) {
  if (d < 2) throw UnsupportedParameter("fixed point sums need d >= 2");
  Permutation p = identity_permutation(d);
  long long fixed_last = 0, moved_last = 0;
  do {
    if (p[static_cast<std::size_t>(d - 1)] == d - 1) fixed_last += fixed_count(p);
    if (p[static_cast<std::size_t>(d - 1)] == d - 2) moved_last += fixed_count(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return {fixed_last, moved_last};
}

std::string render_equation(const AlgebraElement& alpha, const GroupTable& sd) {
  std::string out;
  for (std::size_t s = 0; s < alpha.size(); ++s) {
    const auto& c = alpha.coeffs[s];
    if (c.is_zero()) continue;
    const auto term = term_args(sd.permutation(static_cast<int>(s)));
    bool negative = c.is_rational() && c.to_rational() < 0;
    const Scalar mag = negative ? -c : c;
    std::string body = mag.is_one() ? term : (mag.is_rational() ? mag.to_string() : "(" + mag.to_string() + ")") + "*" + term;
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return (out.empty() ? "0" : out) + " = 0";
}

std::vector<EquationCertificate> equation_certificates(const GroupTable& sd, const ClassPartition& partition,
                                                       const PointTable& points, std::size_t v) {
  const int d = require_full_symmetric(sd);
  if (v >= points.size()) throw InputError("point index out of range");
  if (points.size() > 64) throw UnsupportedParameter("too many irreducibles for certificate search");
  const auto& ctx = points.field;

  // Characters chi_W(class) = a_W * dim_W / |class|.
  auto a_inv = inverse(point_matrix(points));
  if (!a_inv) throw SingularMatrix("point matrix is singular");
  const Matrix b = a_inv->transpose();
  std::vector<std::vector<Scalar>> chars;
  for (std::size_t w = 0; w < points.size(); ++w) {
    const int dim = dimension_of(b.row(w), sd);
    std::vector<Scalar> row;
    for (std::size_t c = 0; c < partition.count(); ++c)
      row.push_back(points.points[w][c].scaled(dim) / ctx.from_integer(static_cast<long long>(partition.sizes[c])));
    chars.push_back(std::move(row));
  }

  std::vector<Family> families;
  auto add_family = [&](std::string name, const std::vector<Permutation>& gens, bool whole) {
    const auto conj = conjugates_of(sd, gens);
    for (bool sgn : {false, true}) {
      if (sgn && name.rfind("cyclic", 0) == 0) continue;
      Family f{name + (sgn ? " sign" : " trivial"), sgn, whole, conj, 0};
      for (std::size_t w = 0; w < points.size(); ++w) {
        Scalar m = ctx.zero();
        for (int h : conj.front()) {
          const Scalar& x = chars[w][static_cast<std::size_t>(partition.class_of[static_cast<std::size_t>(h)])];
          m += sgn && permutation_sign(sd.permutation(h)) < 0 ? -x : x;
        }
        if (m.is_zero()) f.mask |= 1ULL << w;
      }
      if (f.mask >> v & 1ULL) families.push_back(std::move(f));
    }
  };
  for (const auto& mu : partitions_of(d)) {
    if (mu.fixed_points() == d) continue;
    std::vector<Permutation> gens;
    int start = 0;
    for (int part : mu.parts) {
      for (int i = start; i + 1 < start + part; ++i) {
        auto t = identity_permutation(d);
        std::swap(t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(i + 1)]);
        gens.push_back(t);
      }
      start += part;
    }
    add_family("young " + mu.to_string(), gens, mu.parts.size() == 1);
  }
  for (int k = 3; k <= d; ++k) {
    auto c = identity_permutation(d);
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % k;
    add_family("cyclic " + std::to_string(k), {c}, false);
  }

  const unsigned long long target = 1ULL << v;
  std::vector<std::size_t> best, cur;
  std::size_t best_count = SIZE_MAX, best_cost = SIZE_MAX;
  auto search = [&](auto& self, std::size_t from, unsigned long long mask, std::size_t count, std::size_t cost) -> void {
    if (count > best_count || (count == best_count && cost >= best_cost)) return;
    if (mask == target) {
      best = cur;
      best_count = count;
      best_cost = cost;
      return;
    }
    for (std::size_t i = from; i < families.size(); ++i) {
      const auto next = mask & families[i].mask;
      if (next == mask) continue;
      cur.push_back(i);
      self(self, i + 1, next, count + families[i].conjugates.size(), cost + families[i].cost());
      cur.pop_back();
    }
  };
  const unsigned long long all = points.size() == 64 ? ~0ULL : (1ULL << points.size()) - 1;
  search(search, 0, all, 0, 0);

  std::vector<EquationCertificate> out;
  if (best.empty()) {
    const auto sep = separating_element(points, v);
    AlgebraElement e{expand_to_group_basis(sep.coeffs, partition)};
    out.push_back({e, "class hyperplane", render_equation(e, sd)});
    return out;
  }
  for (auto i : best) {
    const auto& f = families[i];
    for (const auto& members : f.conjugates) {
      auto e = AlgebraElement::zero(sd, ctx);
      for (int h : members)
        e.coeffs[static_cast<std::size_t>(h)] =
            f.signed_char ? ctx.from_integer(permutation_sign(sd.permutation(h))) : ctx.one();
      std::string text;
      if (f.whole_group) {
        std::string args;
        for (int k = 1; k <= d; ++k) args += (k > 1 ? ",x_s(" : "x_s(") + std::to_string(k) + ")";
        text = "sum_{s in S" + std::to_string(d) + "} " + (f.signed_char ? "sgn(s) " : "") + "F(" + args + ") = 0";
      } else {
        text = render_equation(e, sd);
      }
      out.push_back({std::move(e), f.name, std::move(text)});
    }
  }
  return out;
}

}  // namespace centerpoint
