#include "tatehh/closed_forms.hpp"

#include <gmpxx.h>

#include "tatehh/errors.hpp"

namespace tatehh {

namespace {

bool divides(std::uint64_t p, int a) { return p != 0 && static_cast<std::uint64_t>(a) % p == 0; }

std::uint64_t to_u64(const mpz_class& v) {
  if (v < 0 || !v.fits_ulong_p()) throw DomainError("closed form value " + v.get_str() + " exceeds 64 bits");
  return v.get_ui();
}

mpz_class binom_z(std::int64_t m, std::int64_t r) {
  if (r < 0 || m < 0 || r > m) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(r));
  return out;
}

mpz_class power(std::int64_t base, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

std::uint64_t binom(std::int64_t m, std::int64_t r) { return to_u64(binom_z(m, r)); }

std::uint64_t holm_dim(int a, std::uint64_t p, int n) {
  require(a >= 2 && n >= 0, "holm_dim needs a >= 2 and n >= 0");
  if (n == 0 || divides(p, a)) return static_cast<std::uint64_t>(a);
  return static_cast<std::uint64_t>(a - 1);
}

std::uint64_t ci_dim(int c, int a, std::uint64_t p, int n) {
  require(c >= 1 && a >= 2 && n >= 0, "ci_dim needs c >= 1, a >= 2 and n >= 0");
  if (divides(p, a)) return to_u64(binom_z(c + n - 1, n) * power(a, c));
  if (n == 0) return to_u64(power(a, c) - 1);
  mpz_class sum = 0;
  for (int t = 0; t <= c; ++t) sum += binom_z(c, t) * binom_z(n - 1, n - c + t) * power(a, t) * power(a - 1, c - t);
  return to_u64(sum);
}

std::uint64_t exterior_dim(int c, std::uint64_t p, int n) {
  require(c >= 1 && n >= 0, "exterior_dim needs c >= 1 and n >= 0");
  if (p == 2) return to_u64(power(2, c) * binom_z(c + n - 1, c - 1));
  if (n == 0) return to_u64(power(2, c) - power(2, c - 1));
  return to_u64(power(2, c - 1) * binom_z(c + n - 1, c - 1));
}

std::uint64_t lower_bound(const std::vector<int>& exponents, std::uint64_t p, int n) {
  require(!exponents.empty(), "lower_bound needs at least one exponent");
  std::int64_t sum = 0;
  std::int64_t d = 0;
  for (int a : exponents) {
    require(a >= 2, "lower_bound needs every exponent >= 2");
    sum += a - 1;
    if (divides(p, a)) ++d;
  }
  if (n == 0 || n == -1) return static_cast<std::uint64_t>(sum + (d > 0 ? 1 : 0));
  return static_cast<std::uint64_t>(sum + d);
}

std::uint64_t codim2_homology_dim(int a, int b, std::uint64_t p, int n) {
  require(a >= 2 && b >= 2, "codim2_homology_dim needs a, b >= 2");
  const bool pa = divides(p, a);
  const bool pb = divides(p, b);
  const auto base = static_cast<std::uint64_t>(a + b - 2);
  if (n == 0 || n == -1) return base + ((pa || pb) ? 1 : 0);
  if (pa && pb) return base + 2;
  return base + ((pa || pb) ? 1 : 0);
}

std::uint64_t codim2_cohomology_dim(int n) {
  switch (n) {
    case 0:
      return 1;
    case 1:
      return 2;
    case 2:
      return 1;
    default:
      return 0;
  }
}

}  // namespace tatehh
