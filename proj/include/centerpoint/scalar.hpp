#pragma once

// Exact coefficient fields: the rationals, prime fields F_p, and cyclotomic
// extensions Q(zeta_m) stored modulo the m-th cyclotomic polynomial.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace centerpoint {

using Integer = mpz_class;
using Rational = mpq_class;

enum class FieldKind { Rational, PrimeField, Cyclotomic };

class Scalar;
struct CyclotomicTables;

/// Identifies the field a Scalar lives in. Cheap to copy; cyclotomic tables
/// are interned process-wide and never freed.
class FieldContext {
 public:
  static FieldContext rationals();
  /// Throws UnsupportedParameter unless p is prime.
  static FieldContext prime_field(std::uint64_t p);
  /// Q(zeta_m), m >= 1. Conductors 1 and 2 give a degree-one field distinct
  /// from rationals() as a context.
  static FieldContext cyclotomic(int conductor);
  /// Parses "Q", "Qzeta:M" or "Fp:P".
  static FieldContext parse(std::string_view spec);

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const;
  int conductor() const;
  /// Dimension over the prime field: phi(m) for cyclotomic contexts, else 1.
  int degree() const;
  std::uint64_t characteristic() const;
  /// Coefficients of Phi_m, constant term first. Cyclotomic contexts only.
  const std::vector<Integer>& cyclotomic_modulus() const;
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_integer(long long v) const;
  Scalar from_integer(const Integer& v) const;
  Scalar from_rational(const Rational& v) const;
  /// zeta_m^k in a cyclotomic context.
  Scalar zeta(long long k = 1) const;
  /// Parses a rational literal ("p/q" or "p") into this field.
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const FieldContext& a, const FieldContext& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }

 private:
  FieldContext(FieldKind kind, std::uint64_t param, const CyclotomicTables* tables)
      : kind_(kind), param_(param), cyclo_(tables) {}

  FieldKind kind_ = FieldKind::Rational;
  std::uint64_t param_ = 0;
  const CyclotomicTables* cyclo_ = nullptr;

  friend class Scalar;
};

/// An exact field element tagged with its context.
class Scalar {
 public:
  /// Rational zero.
  Scalar() = default;

  const FieldContext& context() const { return ctx_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (always false for prime fields).
  bool is_rational() const;
  /// The value as a rational. Throws ContextMismatch when !is_rational().
  Rational to_rational() const;
  /// Residue in [0, p). Prime-field contexts only.
  std::uint64_t residue() const;
  /// Power-basis coordinates (length phi(m)). Cyclotomic contexts only.
  const std::vector<Rational>& cyclotomic_coeffs() const;
  /// True when the value lies in Z (or Z[zeta_m] for cyclotomic contexts).
  bool is_algebraic_integer() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(long long e) const;
  /// Multiplication by an integer without building a Scalar for it.
  Scalar scaled(long long k) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Human-readable form, e.g. "-1/6", "151", "1 + 2*z12^3".
  std::string to_string() const;

  /// Rebuilds a cyclotomic element from power-basis coordinates.
  static Scalar from_cyclotomic_coeffs(const FieldContext& ctx, std::vector<Rational> coeffs);
  static Scalar from_residue(const FieldContext& ctx, std::uint64_t r);

 private:
  void require_same(const Scalar& o) const;

  FieldContext ctx_ = FieldContext::rationals();
  std::variant<Rational, std::uint64_t, std::vector<Rational>> value_{Rational(0)};

  friend class FieldContext;
};

enum class ArithmeticOp { Add, Sub, Mul, Div };

/// Exact a op b. Throws ContextMismatch or DivisionByZero.
Scalar field_arithmetic(const Scalar& a, const Scalar& b, ArithmeticOp op);

/// Total order used for canonical sorting: numeric for rationals,
/// by residue for prime fields, lexicographic on coordinates for cyclotomics.
std::strong_ordering compare_canonical(const Scalar& a, const Scalar& b);

/// Phi_m as integer coefficients, constant term first.
std::vector<Integer> cyclotomic_polynomial(int m);

/// The unique a/b with |a|, b <= bound, gcd(b, p) = 1 and a == b * residue
/// (mod p). Throws BoundTooLargeForModulus when 2 * bound^2 >= p.
std::optional<Rational> rational_reconstruct(const Integer& residue, const Integer& p,
                                              const Integer& bound);

/// Image of q in F_p. Throws DivisionByZero if p divides the denominator.
std::uint64_t reduce_mod_p(const Rational& q, std::uint64_t p);

/// Rational literal parser: "p/q", "p" (reduced on construction).
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

/// Image of x in a larger field: Q into anything, Q(zeta_m) into Q(zeta_M)
/// for m | M via zeta_m -> zeta_M^(M/m). Throws ContextMismatch otherwise.
Scalar embed_scalar(const Scalar& x, const FieldContext& target);
/// The element of the subfield Q(zeta_m) equal to x, if x lies in it.
std::optional<Scalar> restrict_scalar(const Scalar& x, const FieldContext& subfield);
/// Reduction modulo p sending zeta_m to g^((p-1)/m), g the smallest
/// primitive root mod p. Requires p = 1 mod m for cyclotomic inputs.
std::uint64_t project_scalar(const Scalar& x, std::uint64_t p);

// Elementary number theory used across modules.
bool is_prime(std::uint64_t n);
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
/// Smallest generator of the multiplicative group of F_p.
std::uint64_t primitive_root(std::uint64_t p);
int euler_phi(int m);
std::vector<int> divisors(int m);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace centerpoint
