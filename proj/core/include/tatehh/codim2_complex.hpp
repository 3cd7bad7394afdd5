#pragma once

#include <cstddef>
#include <vector>

#include "tatehh/algebra.hpp"
#include "tatehh/sparse.hpp"

namespace tatehh {

/// The eight scalars K_1..K_8 of the minimal complex for
/// k<X,Y>/(X^a, XY - qYX, Y^b).
class KScalarTable {
 public:
  KScalarTable(FieldSpec field, int a, int b, Scalar q);
  /// UsageError when the parity/range side condition of K_m fails.
  Scalar k(int m, int t, int i, int u, int v) const;

  int a() const { return a_; }
  int b() const { return b_; }
  const FieldSpec& field() const { return field_; }

 private:
  Scalar q_pow(std::int64_t e) const { return scalar_pow(q_, e); }
  Scalar geometric(int terms, std::int64_t step) const;

  FieldSpec field_;
  int a_;
  int b_;
  Scalar q_;
};

/// Spaces (+)_{i=0}^n A e^n_i with basis y^u x^v e^n_i at index
/// (v + a u) + ab i, and maps delta_n : degree n -> n - 1 for 1 <= n <= N.
class DeltaComplex {
 public:
  /// How the K_7 term of delta_{2t+1} enters. Taken with a plus sign the
  /// composites fail to vanish from delta_2 o delta_3 on; negating K_7 is the
  /// single sign change that makes every composite vanish.
  enum class Signs { corrected, literal };

  /// HypothesisError unless c = 2 over the rationals with q not a root of unity.
  DeltaComplex(const QciSpec& spec, int max_degree, Signs signs = Signs::corrected);

  int max_degree() const { return static_cast<int>(deltas_.size()); }
  std::size_t space_dim(int n) const { return static_cast<std::size_t>(n + 1) * ab_; }
  /// delta_n for 1 <= n <= N.
  const SparseMatrix& delta(int n) const;
  const KScalarTable& scalars() const { return k_; }

  /// delta_n o delta_{n+1} = 0 for all 1 <= n < N.
  bool composition_is_zero() const;

 private:
  SparseMatrix build(int n) const;

  KScalarTable k_;
  Signs signs_;
  std::size_t ab_;
  std::vector<SparseMatrix> deltas_;
};

/// Codim-2 parameters (a, b, q) of a two-generator spec.
struct Codim2Params {
  int a;
  int b;
  Scalar q;
};
/// HypothesisError unless the algebra has two generators over the rationals with q not a root of unity.
Codim2Params codim2_params(const QciSpec& spec);

/// Homology of the delta complex at n = 1..N-1, i.e. HH_n(A, _{nu^-1}A_1).
std::vector<std::size_t> twisted_homology_dims(const QciSpec& spec, int max_degree);
/// dim ker delta_n for n = 1..N.
std::vector<std::size_t> kernel_dims(const QciSpec& spec, int max_degree);

}  // namespace tatehh
