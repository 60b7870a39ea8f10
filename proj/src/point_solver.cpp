#include "centerpoint/point_solver.hpp"

#include <algorithm>
#include <random>

#include "centerpoint/errors.hpp"

namespace centerpoint {

namespace {

using Vec = std::vector<std::uint64_t>;
using Mat = std::vector<Vec>;

constexpr int kMaxSplitAttempts = 64;

struct ModP {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, p); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
  std::uint64_t inv(std::uint64_t a) const { return inv_mod(a, p); }
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m, const ModP& f) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m.front().size();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[lead]);
    const auto inv = f.inv(m[lead][c]);
    for (auto& x : m[lead]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m[r][c] == 0) continue;
      const auto k = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[lead][j]));
    }
    pivots.push_back(c);
    ++lead;
  }
  m.resize(lead);
  return pivots;
}

Mat nullspace(Mat m, const ModP& f) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  auto pivots = rref(m, f);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Mat out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.sub(0, m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial (constant term first) via Hessenberg reduction.
Vec charpoly(Mat h, const ModP& f) {
  const std::size_t n = h.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (auto& row : h) std::swap(row[piv], row[j + 1]);
    }
    const auto inv = f.inv(h[j + 1][j]);
    for (std::size_t r = j + 2; r < n; ++r) {
      if (h[r][j] == 0) continue;
      const auto k = f.mul(h[r][j], inv);
      for (std::size_t c = 0; c < n; ++c) h[r][c] = f.sub(h[r][c], f.mul(k, h[j + 1][c]));
      for (std::size_t c = 0; c < n; ++c) h[c][j + 1] = f.add(h[c][j + 1], f.mul(k, h[c][r]));
    }
  }
  std::vector<Vec> polys{Vec{1}};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    Vec cur(m + 1, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      cur[i + 1] = f.add(cur[i + 1], prev[i]);
      cur[i] = f.sub(cur[i], f.mul(h[m - 1][m - 1], prev[i]));
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = f.mul(t, h[i][i - 1]);
      const auto coef = f.mul(h[i - 1][m - 1], t);
      if (coef != 0)
        for (std::size_t k = 0; k < polys[i - 1].size(); ++k) cur[k] = f.sub(cur[k], f.mul(coef, polys[i - 1][k]));
    }
    polys.push_back(std::move(cur));
  }
  return polys.back();
}

// Distinct roots in F_p by scanning with deflation. Empty optional if the
// polynomial does not split into linear factors.
std::optional<Vec> split_roots(Vec poly, const ModP& f) {
  Vec roots;
  auto eval = [&](std::uint64_t t) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = f.add(f.mul(acc, t), poly[i]);
    return acc;
  };
  for (std::uint64_t t = 0; t < f.p && poly.size() > 1; ++t) {
    if (eval(t) != 0) continue;
    roots.push_back(t);
    while (poly.size() > 1 && eval(t) == 0) {
      Vec q(poly.size() - 1);
      std::uint64_t carry = 0;
      for (std::size_t i = poly.size(); i-- > 1;) {
        carry = f.add(poly[i], f.mul(carry, t));
        q[i - 1] = carry;
      }
      poly = std::move(q);
    }
  }
  if (poly.size() > 1) return std::nullopt;
  return roots;
}

Vec apply(const Mat& m, const Vec& v, const ModP& f) {
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] && v[j]) out[i] = f.add(out[i], f.mul(m[i][j], v[j]));
  return out;
}

class Splitter {
 public:
  Splitter(const std::vector<Mat>& mats, const ModP& f, std::uint64_t seed) : mats_(mats), f_(f), rng_(seed) {}

  void split(Mat basis, const std::vector<std::size_t>& pivots) {
    const std::size_t k = basis.size();
    if (k == 1) {
      lines_.push_back(std::move(basis.front()));
      return;
    }
    const std::size_t r = mats_.front().size();
    std::uniform_int_distribution<std::uint64_t> dist(1, f_.p - 1);
    for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
      Mat comb(r, Vec(r, 0));
      for (const auto& m : mats_) {
        const auto w = dist(rng_);
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j) comb[i][j] = f_.add(comb[i][j], f_.mul(w, m[i][j]));
      }
      // Restriction to the subspace: the RREF basis has identity pivot columns.
      Mat images;
      for (const auto& b : basis) images.push_back(apply(comb, b, f_));
      Mat restricted(k, Vec(k, 0));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) restricted[i][j] = images[j][pivots[i]];
      auto roots = split_roots(charpoly(restricted, f_), f_);
      if (!roots || roots->size() < 2) continue;
      std::vector<Mat> spaces;
      std::size_t total = 0;
      for (auto t : *roots) {
        Mat shifted = restricted;
        for (std::size_t i = 0; i < k; ++i) shifted[i][i] = f_.sub(shifted[i][i], t);
        Mat coords = nullspace(shifted, f_);
        Mat full;
        for (const auto& c : coords) {
          Vec v(r, 0);
          for (std::size_t i = 0; i < k; ++i)
            if (c[i])
              for (std::size_t j = 0; j < r; ++j) v[j] = f_.add(v[j], f_.mul(c[i], basis[i][j]));
          full.push_back(std::move(v));
        }
        total += full.size();
        spaces.push_back(std::move(full));
      }
      if (total != k) continue;
      for (auto& s : spaces) {
        auto piv = rref(s, f_);
        split(std::move(s), piv);
      }
      return;
    }
    throw SplitFailure("joint eigenspaces did not separate modulo " + std::to_string(f_.p));
  }

  const Mat& lines() const { return lines_; }

 private:
  const std::vector<Mat>& mats_;
  ModP f_;
  std::mt19937_64 rng_;
  Mat lines_;
};

std::strong_ordering compare_points(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto c = compare_canonical(a[i], b[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  return a.size() <=> b.size();
}

}  // namespace

void sort_points(PointTable& table) {
  // Every non-trivial point has coordinate sum zero; the trivial one sums to |G|.
  auto is_trivial = [&](const std::vector<Scalar>& pt) {
    Scalar s = table.field.zero();
    for (const auto& x : pt) s += x;
    return !s.is_zero();
  };
  std::sort(table.points.begin(), table.points.end(), [&](const auto& a, const auto& b) {
    const bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    return compare_points(a, b) == std::strong_ordering::greater;
  });
}

std::uint64_t choose_solving_prime(const GroupTable& group, std::uint64_t /*seed*/) {
  const std::uint64_t n = group.order();
  const std::uint64_t e = static_cast<std::uint64_t>(group.exponent());
  const std::uint64_t floor = 4 * n * n;
  // First candidate above floor that is 1 mod e.
  std::uint64_t p = floor + 1;
  p += (e - (p - 1) % e) % e;
  while (!is_prime(p) || n % p == 0) p += e;
  return p;
}

PointTable solve_points_mod_p(const ClassAlgebra& algebra, std::uint64_t p, std::uint64_t seed) {
  if (!is_prime(p)) throw UnsupportedParameter(std::to_string(p) + " is not prime");
  if (algebra.group().order() % p == 0)
    throw UnsupportedParameter("characteristic " + std::to_string(p) + " divides the group order");
  const ModP f{p};
  const std::size_t r = algebra.rank();
  std::vector<Mat> mats(r, Mat(r, Vec(r, 0)));
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t mu = 0; mu < r; ++mu)
      for (std::size_t nu = 0; nu < r; ++nu)
        mats[l][nu][mu] = static_cast<std::uint64_t>(algebra.c(l, mu, nu)) % p;

  Mat identity(r, Vec(r, 0));
  std::vector<std::size_t> pivots(r);
  for (std::size_t i = 0; i < r; ++i) {
    identity[i][i] = 1;
    pivots[i] = i;
  }
  Splitter splitter(mats, f, seed);
  splitter.split(std::move(identity), pivots);

  PointTable out;
  out.field = FieldContext::prime_field(p);
  out.prime = p;
  for (const auto& v : splitter.lines()) {
    std::size_t i = 0;
    while (v[i] == 0) ++i;
    const auto inv = f.inv(v[i]);
    std::vector<Scalar> point;
    for (std::size_t l = 0; l < r; ++l) {
      std::uint64_t s = 0;
      for (std::size_t j = 0; j < r; ++j)
        if (mats[l][i][j] && v[j]) s = f.add(s, f.mul(mats[l][i][j], v[j]));
      point.push_back(Scalar::from_residue(out.field, f.mul(s, inv)));
    }
    out.points.push_back(std::move(point));
  }
  if (out.points.size() != r) throw SplitFailure("found " + std::to_string(out.points.size()) + " points, expected " + std::to_string(r));
  sort_points(out);
  return out;
}

PointTable lift_points(const PointTable& mod_p, const ClassAlgebra& algebra) {
  const auto p = mod_p.prime;
  const auto& group = algebra.group();
  const auto& part = algebra.partition();
  const std::size_t r = algebra.rank();
  const int e = group.exponent();
  if (mod_p.field.kind() != FieldKind::PrimeField || p == 0) throw LiftFailure("lifting needs a modular point table");
  if ((p - 1) % static_cast<std::uint64_t>(e) != 0)
    throw UnsupportedParameter("prime must be 1 modulo the group exponent");
  if (mod_p.size() != r) throw LiftFailure("point count differs from class count");
  const ModP f{p};
  const Integer order_z(static_cast<unsigned long>(group.order()));
  const Integer p_z(static_cast<unsigned long>(p));

  Matrix a(r, r, mod_p.field);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a(i, j) = mod_p.points[i][j];
  auto a_inv = inverse(a);
  if (!a_inv) throw LiftFailure("modular points are linearly dependent");

  const std::uint64_t g = primitive_root(p);
  const std::uint64_t theta_e = pow_mod(g, (p - 1) / static_cast<std::uint64_t>(e), p);
  const auto big = FieldContext::cyclotomic(e);

  std::vector<std::vector<Scalar>> lifted;
  for (std::size_t v = 0; v < r; ++v) {
    // Identity coefficient of the idempotent is row v of (A^-1)^t at class 0.
    const auto c0 = (*a_inv)(0, v).residue();
    const auto dim_sq_res = f.mul(c0, group.order() % p);
    const auto dim_sq = rational_reconstruct(Integer(static_cast<unsigned long>(dim_sq_res)), p_z, order_z);
    if (!dim_sq || dim_sq->get_den() != 1 || *dim_sq <= 0) throw LiftFailure("dimension does not reconstruct");
    const Integer dsq = dim_sq->get_num();
    const Integer dz = sqrt(dsq);
    if (dz * dz != dsq) throw LiftFailure("dimension squared " + dsq.get_str() + " is not a square");
    const long d = dz.get_si();

    std::vector<std::uint64_t> chi(r);
    for (std::size_t l = 0; l < r; ++l)
      chi[l] = f.mul(f.mul(mod_p.points[v][l].residue(), static_cast<std::uint64_t>(d) % p),
                     f.inv(part.sizes[l] % p));

    std::vector<Scalar> point;
    for (std::size_t l = 0; l < r; ++l) {
      const int o = part.class_element_order[l];
      const auto theta = pow_mod(theta_e, static_cast<std::uint64_t>(e / o), p);
      const auto inv_o = f.inv(static_cast<std::uint64_t>(o) % p);
      Scalar value = big.zero();
      long total = 0;
      for (int j = 0; j < o; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < o; ++k) {
          const auto pc = static_cast<std::size_t>(part.power_class(static_cast<int>(l), k));
          const auto root = pow_mod(theta, static_cast<std::uint64_t>((static_cast<long long>(o) - (static_cast<long long>(j) * k) % o) % o), p);
          s = f.add(s, f.mul(chi[pc], root));
        }
        const auto n = f.mul(s, inv_o);
        if (n > static_cast<std::uint64_t>(d))
          throw LiftFailure("multiplicity of a root of unity is outside [0, dim]");
        total += static_cast<long>(n);
        if (n) value += big.zeta(static_cast<long long>(j) * (e / o)).scaled(static_cast<long long>(n));
      }
      if (total != d) throw LiftFailure("multiplicities do not sum to the dimension");
      value = value * big.from_rational(Rational(static_cast<long>(part.sizes[l]), d));
      point.push_back(std::move(value));
    }
    lifted.push_back(std::move(point));
  }

  PointTable out;
  out.prime = p;
  bool all_rational = true;
  for (const auto& pt : lifted)
    for (const auto& x : pt) all_rational = all_rational && x.is_rational();
  if (all_rational) {
    out.field = FieldContext::rationals();
    const Integer bound = order_z;
    for (std::size_t v = 0; v < r; ++v) {
      std::vector<Scalar> pt;
      for (std::size_t l = 0; l < r; ++l) {
        const Rational q = lifted[v][l].to_rational();
        const auto check = rational_reconstruct(Integer(static_cast<unsigned long>(mod_p.points[v][l].residue())), p_z, bound);
        if (!check || *check != q) throw LiftFailure("lifted rational disagrees with reconstruction");
        pt.push_back(out.field.from_rational(q));
      }
      out.points.push_back(std::move(pt));
    }
  } else {
    out.field = big;
    for (int m : divisors(e)) {
      if (m == 1 || m % 4 == 2) continue;
      const auto sub = FieldContext::cyclotomic(m);
      std::vector<std::vector<Scalar>> restricted;
      bool ok = true;
      for (const auto& pt : lifted) {
        std::vector<Scalar> rp;
        for (const auto& x : pt) {
          auto y = restrict_scalar(x, sub);
          if (!y) {
            ok = false;
            break;
          }
          rp.push_back(std::move(*y));
        }
        if (!ok) break;
        restricted.push_back(std::move(rp));
      }
      if (ok) {
        out.field = sub;
        lifted = std::move(restricted);
        break;
      }
    }
    out.points = std::move(lifted);
  }
  sort_points(out);
  if (project_points(out, p).points != mod_p.points) throw LiftFailure("lifted points do not reduce to the modular points");
  return out;
}

PointTable compute_points(const ClassAlgebra& algebra, std::uint64_t seed) {
  const auto p = choose_solving_prime(algebra.group(), seed);
  return lift_points(solve_points_mod_p(algebra, p, seed), algebra);
}

PointTable project_points(const PointTable& table, std::uint64_t p) {
  PointTable out;
  out.field = FieldContext::prime_field(p);
  out.prime = p;
  for (const auto& pt : table.points) {
    std::vector<Scalar> q;
    for (const auto& x : pt) q.push_back(Scalar::from_residue(out.field, project_scalar(x, p)));
    out.points.push_back(std::move(q));
  }
  sort_points(out);
  return out;
}

PointTable convert_points(const PointTable& table, const FieldContext& target) {
  if (target.kind() == FieldKind::PrimeField) return project_points(table, target.modulus());
  PointTable out;
  out.field = target;
  out.prime = table.prime;
  for (const auto& pt : table.points) {
    std::vector<Scalar> q;
    for (const auto& x : pt) {
      if (target.kind() == FieldKind::Cyclotomic && x.context().kind() == FieldKind::Cyclotomic &&
          target.conductor() % x.context().conductor() != 0) {
        auto y = restrict_scalar(x, target);
        if (!y) throw ContextMismatch("coordinate " + x.to_string() + " does not lie in " + target.name());
        q.push_back(std::move(*y));
      } else if (target.kind() == FieldKind::Rational) {
        if (!x.is_rational()) throw ContextMismatch("coordinate " + x.to_string() + " is not rational");
        q.push_back(target.from_rational(x.to_rational()));
      } else {
        q.push_back(embed_scalar(x, target));
      }
    }
    out.points.push_back(std::move(q));
  }
  sort_points(out);
  return out;
}

VerificationReport verify_points(const PointTable& table, const ClassAlgebra& algebra) {
  VerificationReport rep;
  const std::size_t r = algebra.rank();
  rep.add("count", table.size() == r,
          "found " + std::to_string(table.size()) + " points for " + std::to_string(r) + " classes");
  for (std::size_t v = 0; v < table.size(); ++v) {
    const auto& a = table.points[v];
    const std::string tag = "point " + std::to_string(v);
    if (a.size() != r) {
      rep.add(tag + " length", false, "expected " + std::to_string(r) + " coordinates");
      continue;
    }
    rep.add(tag + " identity coordinate", a[0].is_one(), "identity coordinate is " + a[0].to_string());
    std::string bad;
    for (std::size_t l = 0; l < r && bad.empty(); ++l)
      for (std::size_t m = l; m < r && bad.empty(); ++m) {
        Scalar rhs = table.field.zero();
        for (std::size_t n = 0; n < r; ++n)
          if (const auto c = algebra.c(l, m, n)) rhs += a[n].scaled(c);
        if (!(a[l] * a[m] == rhs))
          bad = "relation for " + class_symbol(l) + "*" + class_symbol(m) + " fails: " + (a[l] * a[m]).to_string() +
                " != " + rhs.to_string();
      }
    rep.add(tag + " homomorphism", bad.empty(), bad);
  }
  bool distinct = true;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (table.points[i] == table.points[j]) distinct = false;
  rep.add("distinct", distinct, distinct ? "" : "repeated point");
  return rep;
}

}  // namespace centerpoint
