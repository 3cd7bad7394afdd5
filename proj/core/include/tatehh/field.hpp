#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace tatehh {

/// The ground field: either GF(p) for a prime p < 2^61, or the rationals.
class FieldSpec {
 public:
  enum class Kind { prime, rational };

  static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }
  /// Throws DomainError unless p is a prime below 2^61.
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_prime() const { return kind_ == Kind::prime; }
  bool is_rational() const { return kind_ == Kind::rational; }
  std::uint64_t characteristic() const { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;

  FieldSpec(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint64_t p_;
};

bool is_prime_u64(std::uint64_t n);

/// An exact field element in canonical form: a residue in [0, p) or a
/// reduced fraction with positive denominator. Scalars remember their field
/// and mixing fields in one operation is a UsageError.
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar();

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, std::int64_t value);
  static Scalar from_fraction(const FieldSpec& field, const mpz_class& num,
                              const mpz_class& den);
  /// Residue constructor; `value` is reduced modulo p.
  static Scalar residue(const FieldSpec& field, std::uint64_t value);
  static Scalar rational(const mpq_class& value);

  /// Parses "n", "-n" or "n/d" (decimal integers). Over GF(p) the value is
  /// reduced; a denominator divisible by p is a ParseError.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Canonical residue; UsageError over the rationals.
  std::uint64_t residue_value() const;
  /// Canonical fraction; UsageError over a prime field.
  const mpq_class& rational_value() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  /// Equal iff same field and identical canonical representation.
  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  /// DomainError for zero.
  Scalar inverse() const;

  /// "n/d", "n", or the residue.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };

  explicit Scalar(Residue r) : rep_(r) {}
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}

  void require_same_field(const Scalar& other) const;

  std::variant<Residue, mpq_class> rep_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// x^n for any integer n; x^0 = 1. DomainError for 0 raised to n < 0.
Scalar scalar_pow(const Scalar& x, std::int64_t n);

/// True iff q has infinite multiplicative order. Over the rationals that is
/// q not in {1, -1}; over GF(p) it is never the case. DomainError for q = 0.
bool assert_not_root_of_unity(const Scalar& q, const FieldSpec& field);

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

}  // namespace modp

}  // namespace tatehh
