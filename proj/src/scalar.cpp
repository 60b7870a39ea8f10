#include "centerpoint/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "centerpoint/errors.hpp"

namespace centerpoint {

struct CyclotomicTables {
  int m = 1;
  int phi = 1;
  std::vector<Integer> modulus;                  // Phi_m, constant term first
  std::vector<std::vector<Integer>> reduce_rows;  // x^(phi+k) mod Phi_m
  std::vector<std::vector<Integer>> zeta_powers;  // x^k mod Phi_m, k < m
};

namespace {

// Exact division of a by the monic polynomial b (constant term first).
std::vector<Integer> divide_exact(std::vector<Integer> a, const std::vector<Integer>& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {};
  std::vector<Integer> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::vector<Integer> cyclotomic_polynomial_memo(int m, std::map<int, std::vector<Integer>>& memo) {
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  std::vector<Integer> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    p = divide_exact(std::move(p), cyclotomic_polynomial_memo(d, memo));
  }
  memo.emplace(m, p);
  return p;
}

std::unique_ptr<CyclotomicTables> build_tables(int m) {
  auto t = std::make_unique<CyclotomicTables>();
  t->m = m;
  t->modulus = cyclotomic_polynomial(m);
  t->phi = static_cast<int>(t->modulus.size()) - 1;
  const auto phi = static_cast<std::size_t>(t->phi);

  // Walk x^0, x^1, ... reducing x^phi via the monic relation.
  std::vector<Integer> cur(phi, 0);
  cur[0] = 1;
  auto times_x = [&](const std::vector<Integer>& v) {
    std::vector<Integer> out(phi, 0);
    const Integer top = v[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) out[i] = v[i - 1];
    out[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) out[i] -= top * t->modulus[i];
    return out;
  };
  const std::size_t needed = std::max<std::size_t>(static_cast<std::size_t>(m), 2 * phi - 1);
  std::vector<std::vector<Integer>> powers;
  powers.reserve(needed);
  for (std::size_t k = 0; k < needed; ++k) {
    powers.push_back(cur);
    cur = times_x(cur);
  }
  t->zeta_powers.assign(powers.begin(), powers.begin() + m);
  for (std::size_t k = phi; k + 1 < 2 * phi; ++k) t->reduce_rows.push_back(powers[k]);
  return t;
}

const CyclotomicTables* intern_tables(int m) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicTables>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[m];
  if (!slot) slot = build_tables(m);
  return slot.get();
}

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw DivisionByZero("cyclotomic element is not invertible");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------
// number theory

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DivisionByZero("zero has no inverse modulo " + std::to_string(p));
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2) return 1;
  std::vector<std::uint64_t> factors;
  std::uint64_t n = p - 1;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      factors.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) factors.push_back(n);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = std::all_of(factors.begin(), factors.end(),
                          [&](std::uint64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; });
    if (ok) return g;
  }
}

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      while (n % q == 0) n /= q;
      result -= result / q;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<int> divisors(int m) {
  std::vector<int> out;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) out.push_back(d);
  return out;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

std::vector<Integer> cyclotomic_polynomial(int m) {
  if (m < 1) throw UnsupportedParameter("cyclotomic conductor must be positive");
  std::map<int, std::vector<Integer>> memo;
  return cyclotomic_polynomial_memo(m, memo);
}

std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& p,
                                             const Integer& bound) {
  if (2 * bound * bound >= p)
    throw BoundTooLargeForModulus("2*bound^2 must be smaller than the modulus");
  Integer r0 = p;
  Integer r1 = residue % p;
  if (r1 < 0) r1 += p;
  Integer t0 = 0;
  Integer t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), t1.get_mpz_t(), p.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

std::uint64_t reduce_mod_p(const Rational& q, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) throw DivisionByZero("denominator divisible by " + std::to_string(p));
  return mul_mod(num, inv_mod(den, p), p);
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw InputError("empty rational literal");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                       [](unsigned char c) { return std::isdigit(c); });
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw InputError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  Integer d(den);
  if (d == 0) throw DivisionByZero("zero denominator in '" + s + "'");
  Rational q(Integer(num), d);
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// FieldContext

FieldContext FieldContext::rationals() { return FieldContext(FieldKind::Rational, 0, nullptr); }

FieldContext FieldContext::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw UnsupportedParameter(std::to_string(p) + " is not prime");
  if (p >= (1ULL << 62)) throw UnsupportedParameter("prime modulus too large");
  return FieldContext(FieldKind::PrimeField, p, nullptr);
}

FieldContext FieldContext::cyclotomic(int conductor) {
  if (conductor < 1) throw UnsupportedParameter("cyclotomic conductor must be positive");
  return FieldContext(FieldKind::Cyclotomic, static_cast<std::uint64_t>(conductor),
                      intern_tables(conductor));
}

FieldContext FieldContext::parse(std::string_view spec) {
  const std::string s(spec);
  if (s == "Q") return rationals();
  auto tail = [&](std::string_view prefix) -> std::optional<std::string> {
    if (s.rfind(prefix, 0) == 0) return s.substr(prefix.size());
    return std::nullopt;
  };
  try {
    if (auto t = tail("Qzeta:")) return cyclotomic(std::stoi(*t));
    if (auto t = tail("Fp:")) return prime_field(std::stoull(*t));
  } catch (const std::logic_error&) {
  }
  throw InputError("unrecognized field '" + s + "' (expected Q, Qzeta:M or Fp:P)");
}

std::uint64_t FieldContext::modulus() const {
  if (kind_ != FieldKind::PrimeField) throw ContextMismatch("modulus() on non-prime field " + name());
  return param_;
}

int FieldContext::conductor() const {
  if (kind_ != FieldKind::Cyclotomic) throw ContextMismatch("conductor() on non-cyclotomic field " + name());
  return static_cast<int>(param_);
}

int FieldContext::degree() const { return kind_ == FieldKind::Cyclotomic ? cyclo_->phi : 1; }

std::uint64_t FieldContext::characteristic() const {
  return kind_ == FieldKind::PrimeField ? param_ : 0;
}

const std::vector<Integer>& FieldContext::cyclotomic_modulus() const {
  if (kind_ != FieldKind::Cyclotomic) throw ContextMismatch("no cyclotomic modulus for " + name());
  return cyclo_->modulus;
}

std::string FieldContext::name() const {
  switch (kind_) {
    case FieldKind::Rational: return "Q";
    case FieldKind::PrimeField: return "Fp:" + std::to_string(param_);
    case FieldKind::Cyclotomic: return "Qzeta:" + std::to_string(param_);
  }
  return "?";
}

Scalar FieldContext::zero() const { return from_integer(0); }
Scalar FieldContext::one() const { return from_integer(1); }
Scalar FieldContext::from_integer(long long v) const {
  static_assert(sizeof(long) == sizeof(long long));
  return from_rational(Rational(Integer(static_cast<long>(v))));
}
Scalar FieldContext::from_integer(const Integer& v) const { return from_rational(Rational(v)); }

Scalar FieldContext::from_rational(const Rational& value) const {
  Rational v = value;
  v.canonicalize();
  Scalar s;
  s.ctx_ = *this;
  switch (kind_) {
    case FieldKind::Rational: s.value_ = v; break;
    case FieldKind::PrimeField: s.value_ = reduce_mod_p(v, param_); break;
    case FieldKind::Cyclotomic: {
      std::vector<Rational> c(static_cast<std::size_t>(cyclo_->phi), Rational(0));
      c[0] = v;
      s.value_ = std::move(c);
      break;
    }
  }
  return s;
}

Scalar FieldContext::zeta(long long k) const {
  if (kind_ != FieldKind::Cyclotomic) throw ContextMismatch("zeta() requires a cyclotomic field, got " + name());
  const long long m = static_cast<long long>(param_);
  const auto idx = static_cast<std::size_t>(((k % m) + m) % m);
  std::vector<Rational> c;
  c.reserve(cyclo_->zeta_powers[idx].size());
  for (const auto& z : cyclo_->zeta_powers[idx]) c.emplace_back(z);
  return Scalar::from_cyclotomic_coeffs(*this, std::move(c));
}

Scalar FieldContext::parse_scalar(std::string_view text) const { return from_rational(parse_rational(text)); }

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::from_cyclotomic_coeffs(const FieldContext& ctx, std::vector<Rational> coeffs) {
  if (ctx.kind() != FieldKind::Cyclotomic) throw ContextMismatch("cyclotomic coefficients need a cyclotomic field");
  if (coeffs.size() != static_cast<std::size_t>(ctx.degree()))
    throw ContextMismatch("coefficient vector length must equal phi(m)");
  for (auto& q : coeffs) q.canonicalize();
  Scalar s;
  s.ctx_ = ctx;
  s.value_ = std::move(coeffs);
  return s;
}

Scalar Scalar::from_residue(const FieldContext& ctx, std::uint64_t r) {
  if (ctx.kind() != FieldKind::PrimeField) throw ContextMismatch("residue needs a prime field");
  Scalar s;
  s.ctx_ = ctx;
  s.value_ = r % ctx.modulus();
  return s;
}

void Scalar::require_same(const Scalar& o) const {
  if (!(ctx_ == o.ctx_)) throw ContextMismatch(ctx_.name() + " vs " + o.ctx_.name());
}

bool Scalar::is_zero() const {
  switch (ctx_.kind()) {
    case FieldKind::Rational: return std::get<Rational>(value_) == 0;
    case FieldKind::PrimeField: return std::get<std::uint64_t>(value_) == 0;
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<std::vector<Rational>>(value_);
      return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q == 0; });
    }
  }
  return false;
}

bool Scalar::is_one() const { return *this == ctx_.one(); }

bool Scalar::is_rational() const {
  switch (ctx_.kind()) {
    case FieldKind::Rational: return true;
    case FieldKind::PrimeField: return false;
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<std::vector<Rational>>(value_);
      return std::all_of(c.begin() + 1, c.end(), [](const Rational& q) { return q == 0; });
    }
  }
  return false;
}

Rational Scalar::to_rational() const {
  if (!is_rational()) throw ContextMismatch("value " + to_string() + " is not rational");
  if (ctx_.kind() == FieldKind::Rational) return std::get<Rational>(value_);
  return std::get<std::vector<Rational>>(value_)[0];
}

std::uint64_t Scalar::residue() const {
  if (ctx_.kind() != FieldKind::PrimeField) throw ContextMismatch("residue() on " + ctx_.name());
  return std::get<std::uint64_t>(value_);
}

const std::vector<Rational>& Scalar::cyclotomic_coeffs() const {
  if (ctx_.kind() != FieldKind::Cyclotomic) throw ContextMismatch("cyclotomic_coeffs() on " + ctx_.name());
  return std::get<std::vector<Rational>>(value_);
}

bool Scalar::is_algebraic_integer() const {
  switch (ctx_.kind()) {
    case FieldKind::Rational: return std::get<Rational>(value_).get_den() == 1;
    case FieldKind::PrimeField: return true;
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<std::vector<Rational>>(value_);
      return std::all_of(c.begin(), c.end(), [](const Rational& q) { return q.get_den() == 1; });
    }
  }
  return false;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (ctx_.kind()) {
    case FieldKind::Rational: std::get<Rational>(r.value_) = -std::get<Rational>(value_); break;
    case FieldKind::PrimeField: {
      auto v = std::get<std::uint64_t>(value_);
      std::get<std::uint64_t>(r.value_) = v == 0 ? 0 : ctx_.param_ - v;
      break;
    }
    case FieldKind::Cyclotomic:
      for (auto& q : std::get<std::vector<Rational>>(r.value_)) q = -q;
      break;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(o);
  switch (ctx_.kind()) {
    case FieldKind::Rational: std::get<Rational>(value_) += std::get<Rational>(o.value_); break;
    case FieldKind::PrimeField: {
      auto& v = std::get<std::uint64_t>(value_);
      v += std::get<std::uint64_t>(o.value_);
      if (v >= ctx_.param_) v -= ctx_.param_;
      break;
    }
    case FieldKind::Cyclotomic: {
      auto& c = std::get<std::vector<Rational>>(value_);
      const auto& d = std::get<std::vector<Rational>>(o.value_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
      break;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(o);
  switch (ctx_.kind()) {
    case FieldKind::Rational: std::get<Rational>(value_) *= std::get<Rational>(o.value_); break;
    case FieldKind::PrimeField: {
      auto& v = std::get<std::uint64_t>(value_);
      v = mul_mod(v, std::get<std::uint64_t>(o.value_), ctx_.param_);
      break;
    }
    case FieldKind::Cyclotomic: {
      const auto* t = ctx_.cyclo_;
      const auto phi = static_cast<std::size_t>(t->phi);
      const auto& a = std::get<std::vector<Rational>>(value_);
      const auto& b = std::get<std::vector<Rational>>(o.value_);
      std::vector<Rational> prod(2 * phi - 1, Rational(0));
      for (std::size_t i = 0; i < phi; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < phi; ++j)
          if (b[j] != 0) prod[i + j] += a[i] * b[j];
      }
      std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi));
      for (std::size_t k = phi; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const auto& row = t->reduce_rows[k - phi];
        for (std::size_t i = 0; i < phi; ++i)
          if (row[i] != 0) out[i] += prod[k] * row[i];
      }
      value_ = std::move(out);
      break;
    }
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + ctx_.name());
  switch (ctx_.kind()) {
    case FieldKind::Rational: {
      Scalar r = *this;
      std::get<Rational>(r.value_) = 1 / std::get<Rational>(value_);
      return r;
    }
    case FieldKind::PrimeField:
      return from_residue(ctx_, inv_mod(std::get<std::uint64_t>(value_), ctx_.param_));
    case FieldKind::Cyclotomic: {
      // Solve a * x = 1 through the matrix of multiplication by a.
      const auto phi = static_cast<std::size_t>(ctx_.degree());
      std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi, Rational(0)));
      for (std::size_t j = 0; j < phi; ++j) {
        const Scalar col = *this * ctx_.zeta(static_cast<long long>(j));
        const auto& c = col.cyclotomic_coeffs();
        for (std::size_t i = 0; i < phi; ++i) m[i][j] = c[i];
      }
      std::vector<Rational> rhs(phi, Rational(0));
      rhs[0] = 1;
      return from_cyclotomic_coeffs(ctx_, solve_rational(std::move(m), std::move(rhs)));
    }
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(o);
  if (o.is_zero()) throw DivisionByZero("division by zero in " + ctx_.name());
  if (ctx_.kind() == FieldKind::Rational) {
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
    return *this;
  }
  if (ctx_.kind() == FieldKind::Cyclotomic && o.is_rational()) {
    const Rational d = o.to_rational();
    for (auto& q : std::get<std::vector<Rational>>(value_)) q /= d;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this;
  Scalar r = ctx_.one();
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Scalar Scalar::scaled(long long k) const {
  Scalar r = *this;
  const long kl = static_cast<long>(k);
  switch (ctx_.kind()) {
    case FieldKind::Rational: std::get<Rational>(r.value_) *= kl; break;
    case FieldKind::PrimeField: {
      const auto p = ctx_.param_;
      const long long km = k % static_cast<long long>(p);
      const auto ku = static_cast<std::uint64_t>(km < 0 ? km + static_cast<long long>(p) : km);
      std::get<std::uint64_t>(r.value_) = mul_mod(std::get<std::uint64_t>(value_), ku, p);
      break;
    }
    case FieldKind::Cyclotomic:
      for (auto& q : std::get<std::vector<Rational>>(r.value_)) q *= kl;
      break;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.ctx_ == b.ctx_)) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  switch (ctx_.kind()) {
    case FieldKind::Rational: return rational_to_string(std::get<Rational>(value_));
    case FieldKind::PrimeField: return std::to_string(std::get<std::uint64_t>(value_));
    case FieldKind::Cyclotomic: {
      const auto& c = std::get<std::vector<Rational>>(value_);
      std::ostringstream os;
      bool first = true;
      const std::string z = "z" + std::to_string(ctx_.param_);
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        Rational q = c[k];
        const bool neg = q < 0;
        if (neg) q = -q;
        if (first) {
          if (neg) os << "-";
        } else {
          os << (neg ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
          os << q.get_str();
        } else {
          if (q != 1) os << q.get_str() << "*";
          os << z;
          if (k > 1) os << "^" << k;
        }
      }
      return first ? "0" : os.str();
    }
  }
  return "?";
}

Scalar field_arithmetic(const Scalar& a, const Scalar& b, ArithmeticOp op) {
  switch (op) {
    case ArithmeticOp::Add: return a + b;
    case ArithmeticOp::Sub: return a - b;
    case ArithmeticOp::Mul: return a * b;
    case ArithmeticOp::Div: return a / b;
  }
  return a;
}

std::strong_ordering compare_canonical(const Scalar& a, const Scalar& b) {
  const auto& ca = a.context();
  const auto& cb = b.context();
  if (!(ca == cb)) {
    if (ca.kind() != cb.kind()) return static_cast<int>(ca.kind()) <=> static_cast<int>(cb.kind());
    return ca.name() <=> cb.name();
  }
  auto cmp_q = [](const Rational& x, const Rational& y) {
    const int c = cmp(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  };
  switch (ca.kind()) {
    case FieldKind::Rational: return cmp_q(a.to_rational(), b.to_rational());
    case FieldKind::PrimeField: return a.residue() <=> b.residue();
    case FieldKind::Cyclotomic: {
      const auto& x = a.cyclotomic_coeffs();
      const auto& y = b.cyclotomic_coeffs();
      for (std::size_t i = 0; i < x.size(); ++i) {
        auto c = cmp_q(x[i], y[i]);
        if (c != std::strong_ordering::equal) return c;
      }
      return std::strong_ordering::equal;
    }
  }
  return std::strong_ordering::equal;
}

Scalar embed_scalar(const Scalar& x, const FieldContext& target) {
  const auto& src = x.context();
  if (src == target) return x;
  if (src.kind() == FieldKind::Rational || (src.kind() == FieldKind::Cyclotomic && x.is_rational())) {
    if (target.kind() == FieldKind::PrimeField || target.kind() == FieldKind::Rational ||
        target.kind() == FieldKind::Cyclotomic)
      return target.from_rational(x.to_rational());
  }
  if (src.kind() == FieldKind::Cyclotomic && target.kind() == FieldKind::Cyclotomic &&
      target.conductor() % src.conductor() == 0) {
    const long long step = target.conductor() / src.conductor();
    Scalar out = target.zero();
    const auto& c = x.cyclotomic_coeffs();
    for (std::size_t k = 0; k < c.size(); ++k)
      if (c[k] != 0) out += target.zeta(static_cast<long long>(k) * step) * target.from_rational(c[k]);
    return out;
  }
  throw ContextMismatch("cannot embed " + src.name() + " into " + target.name());
}

std::optional<Scalar> restrict_scalar(const Scalar& x, const FieldContext& subfield) {
  const auto& src = x.context();
  if (src == subfield) return x;
  if (x.is_rational()) {
    if (subfield.kind() == FieldKind::PrimeField) return std::nullopt;
    return subfield.from_rational(x.to_rational());
  }
  if (src.kind() != FieldKind::Cyclotomic || subfield.kind() != FieldKind::Cyclotomic ||
      src.conductor() % subfield.conductor() != 0)
    return std::nullopt;
  // Solve sum_k c_k zeta_M^(k M/m) = x over Q, one column per power-basis element of Q(zeta_m).
  const std::size_t rows = static_cast<std::size_t>(src.degree());
  const std::size_t cols = static_cast<std::size_t>(subfield.degree());
  const long long step = src.conductor() / subfield.conductor();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t k = 0; k < cols; ++k) {
    const Scalar z = src.zeta(static_cast<long long>(k) * step);
    const auto& img = z.cyclotomic_coeffs();
    for (std::size_t r = 0; r < rows; ++r) a[r][k] = img[r];
  }
  const auto& xc = x.cyclotomic_coeffs();
  for (std::size_t r = 0; r < rows; ++r) a[r][cols] = xc[r];
  std::size_t lead = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col <= cols && lead < rows; ++col) {
    std::size_t piv = lead;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (col == cols) return std::nullopt;
    std::swap(a[piv], a[lead]);
    const Rational inv = 1 / a[lead][col];
    for (auto& v : a[lead]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t j = 0; j <= cols; ++j) a[r][j] -= f * a[lead][j];
    }
    pivots.push_back(col);
    ++lead;
  }
  std::vector<Rational> c(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) c[pivots[r]] = a[r][cols];
  return Scalar::from_cyclotomic_coeffs(subfield, std::move(c));
}

std::uint64_t project_scalar(const Scalar& x, std::uint64_t p) {
  const auto& ctx = x.context();
  switch (ctx.kind()) {
    case FieldKind::Rational: return reduce_mod_p(x.to_rational(), p);
    case FieldKind::PrimeField:
      if (ctx.modulus() != p) throw ContextMismatch("residue modulo a different prime");
      return x.residue();
    case FieldKind::Cyclotomic: {
      const auto m = static_cast<std::uint64_t>(ctx.conductor());
      if ((p - 1) % m != 0) throw UnsupportedParameter("prime is not 1 modulo the conductor");
      const std::uint64_t theta = pow_mod(primitive_root(p), (p - 1) / m, p);
      std::uint64_t acc = 0, t = 1;
      for (const auto& q : x.cyclotomic_coeffs()) {
        acc = (acc + mul_mod(reduce_mod_p(q, p), t, p)) % p;
        t = mul_mod(t, theta, p);
      }
      return acc;
    }
  }
  return 0;
}

}  // namespace centerpoint
