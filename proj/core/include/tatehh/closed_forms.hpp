#pragma once

#include <cstdint>
#include <vector>

namespace tatehh {

// Characteristic p = 0 means the rationals; "p | a" is false there.

/// binom(m, r), zero when r < 0 or r > m (in particular for m < 0).
std::uint64_t binom(std::int64_t m, std::int64_t r);

/// dim HH^n of k[X]/(X^a), n >= 0.
std::uint64_t holm_dim(int a, std::uint64_t p, int n);
/// Commutative complete intersection with c equal exponents a, n >= 0.
std::uint64_t ci_dim(int c, int a, std::uint64_t p, int n);
/// Exterior algebra on c generators, n >= 0.
std::uint64_t exterior_dim(int c, std::uint64_t p, int n);
/// Lower bound on dim of Tate homology of (A, A) in degree n.
std::uint64_t lower_bound(const std::vector<int>& exponents, std::uint64_t p, int n);
/// Tate homology of (A, A) for k<X,Y>/(X^a, XY - qYX, Y^b), q generic.
std::uint64_t codim2_homology_dim(int a, int b, std::uint64_t p, int n);
/// Tate cohomology of (A, A) for the same algebra.
std::uint64_t codim2_cohomology_dim(int n);

/// Tate degree n folded to the non-negative degree of its closed form:
/// n for n >= 0, -(n+1) below.
inline int fold_degree(int n) { return n >= 0 ? n : -(n + 1); }

}  // namespace tatehh
