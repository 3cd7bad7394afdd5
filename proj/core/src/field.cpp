#include "tatehh/field.hpp"

#include <charconv>
#include <ostream>

#include "tatehh/errors.hpp"

namespace tatehh {

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero in GF(" + std::to_string(p) + ")");
  // Fermat; p is prime.
  return pow(a, p - 2, p);
}

}  // namespace modp

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // These witnesses are deterministic for all 64-bit n.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = modp::mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 61)) throw DomainError("prime modulus must be below 2^61");
  if (!is_prime_u64(p)) throw DomainError(std::to_string(p) + " is not prime");
  return FieldSpec(Kind::prime, p);
}

std::string FieldSpec::to_string() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar() : rep_(mpq_class(0)) {}

Scalar Scalar::zero(const FieldSpec& field) { return from_int(field, 0); }
Scalar Scalar::one(const FieldSpec& field) { return from_int(field, 1); }

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t value) {
  if (field.is_rational()) return Scalar(mpq_class(mpz_class(std::to_string(value))));
  const std::uint64_t p = field.characteristic();
  std::int64_t m = value % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return Scalar(Residue{static_cast<std::uint64_t>(m), p});
}

Scalar Scalar::residue(const FieldSpec& field, std::uint64_t value) {
  if (!field.is_prime()) throw UsageError("residue constructor needs a prime field");
  return Scalar(Residue{value % field.characteristic(), field.characteristic()});
}

Scalar Scalar::rational(const mpq_class& value) {
  mpq_class q(value);
  q.canonicalize();
  return Scalar(std::move(q));
}

Scalar Scalar::from_fraction(const FieldSpec& field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("zero denominator");
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
  }
  const mpz_class p(std::to_string(field.characteristic()));
  mpz_class n = num % p;
  if (n < 0) n += p;
  mpz_class d = den % p;
  if (d < 0) d += p;
  if (d == 0) throw DomainError("denominator divisible by the characteristic");
  const std::uint64_t pn = field.characteristic();
  const std::uint64_t nv = std::stoull(n.get_str());
  const std::uint64_t dv = std::stoull(d.get_str());
  return Scalar(Residue{modp::mul(nv, modp::inv(dv, pn), pn), pn});
}

namespace {

bool is_decimal_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  while (!body.empty() && body.back() == ' ') body.remove_suffix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_decimal_integer(num) || !is_decimal_integer(den) || den[0] == '-') {
    throw ParseError("malformed scalar '" + std::string(text) + "'");
  }
  try {
    return from_fraction(field, to_mpz(num), to_mpz(den));
  } catch (const DomainError& e) {
    throw ParseError("malformed scalar '" + std::string(text) + "': " + e.what());
  }
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return FieldSpec(FieldSpec::Kind::prime, r->modulus);
  return FieldSpec::rational();
}

bool Scalar::is_zero() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 0;
  return std::get<mpq_class>(rep_) == 0;
}

bool Scalar::is_one() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value == 1;
  return std::get<mpq_class>(rep_) == 1;
}

std::uint64_t Scalar::residue_value() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return r->value;
  throw UsageError("residue_value on a rational scalar");
}

const mpq_class& Scalar::rational_value() const {
  if (const auto* q = std::get_if<mpq_class>(&rep_)) return *q;
  throw UsageError("rational_value on a prime-field scalar");
}

void Scalar::require_same_field(const Scalar& other) const {
  const auto* a = std::get_if<Residue>(&rep_);
  const auto* b = std::get_if<Residue>(&other.rep_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->modulus != b->modulus)) {
    throw UsageError("scalars from different fields");
  }
}

Scalar Scalar::operator-() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{r->value == 0 ? 0 : r->modulus - r->value, r->modulus});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(rep_)));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value = modp::add(r->value, std::get<Residue>(rhs.rep_).value, r->modulus);
  } else {
    std::get<mpq_class>(rep_) += std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value = modp::sub(r->value, std::get<Residue>(rhs.rep_).value, r->modulus);
  } else {
    std::get<mpq_class>(rep_) -= std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (auto* r = std::get_if<Residue>(&rep_)) {
    r->value = modp::mul(r->value, std::get<Residue>(rhs.rep_).value, r->modulus);
  } else {
    std::get<mpq_class>(rep_) *= std::get<mpq_class>(rhs.rep_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  require_same_field(rhs);
  return *this *= rhs.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (const auto* r = std::get_if<Residue>(&rep_)) {
    return Scalar(Residue{modp::inv(r->value, r->modulus), r->modulus});
  }
  mpq_class q = 1 / std::get<mpq_class>(rep_);
  q.canonicalize();
  return Scalar(std::move(q));
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  const auto* a = std::get_if<Scalar::Residue>(&lhs.rep_);
  const auto* b = std::get_if<Scalar::Residue>(&rhs.rep_);
  if (a != nullptr && b != nullptr) return a->modulus == b->modulus && a->value == b->value;
  if (a != nullptr || b != nullptr) return false;
  return std::get<mpq_class>(lhs.rep_) == std::get<mpq_class>(rhs.rep_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&rep_)) return std::to_string(r->value);
  return std::get<mpq_class>(rep_).get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar scalar_pow(const Scalar& x, std::int64_t n) {
  if (n < 0) {
    if (x.is_zero()) throw DomainError("zero raised to a negative power");
    return scalar_pow(x.inverse(), -n);
  }
  Scalar result = Scalar::one(x.field());
  Scalar base = x;
  auto e = static_cast<std::uint64_t>(n);
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

bool assert_not_root_of_unity(const Scalar& q, const FieldSpec& field) {
  if (q.field() != field) throw UsageError("scalar does not belong to " + field.to_string());
  if (q.is_zero()) throw DomainError("q = 0 is not a unit");
  if (field.is_prime()) return false;
  const mpq_class& v = q.rational_value();
  return v != 1 && v != -1;
}

}  // namespace tatehh
