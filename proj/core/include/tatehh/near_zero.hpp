#pragma once

#include <cstddef>
#include <vector>

#include "tatehh/algebra.hpp"
#include "tatehh/sparse.hpp"

namespace tatehh {

/// An element of A^e = A (x) A^op on the basis l (x) r, index l + dim A * r.
/// Product: (l (x) r)(m (x) s) = lm (x) sr.
class EnvelopingElement {
 public:
  EnvelopingElement(QciAlgebra algebra, std::vector<Scalar> coeffs);
  static EnvelopingElement zero(const QciAlgebra& algebra);
  /// c * (left (x) right) for basis monomials.
  static EnvelopingElement pure(const QciAlgebra& algebra, std::size_t left, std::size_t right, const Scalar& c);

  const QciAlgebra& algebra() const { return algebra_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& coefficient(std::size_t left, std::size_t right) const { return coeffs_[left + algebra_.dim() * right]; }
  std::size_t nonzero_terms() const;
  bool is_zero() const;

  EnvelopingElement& operator+=(const EnvelopingElement& rhs);
  EnvelopingElement& operator-=(const EnvelopingElement& rhs);
  friend EnvelopingElement operator+(EnvelopingElement a, const EnvelopingElement& b) { return a += b; }
  friend EnvelopingElement operator-(EnvelopingElement a, const EnvelopingElement& b) { return a -= b; }
  friend bool operator==(const EnvelopingElement& a, const EnvelopingElement& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

 private:
  QciAlgebra algebra_;
  std::vector<Scalar> coeffs_;
};

EnvelopingElement multiply(const EnvelopingElement& u, const EnvelopingElement& v);

/// s = sum_i (prod_{u<v} q_uv^{-i_v(a_u - i_u - 1)}) x^i (x) x^{a-1-i}.
EnvelopingElement build_s(const QciAlgebra& algebra);

struct ExactnessReport {
  /// (1 (x) x_t - x_t (x) 1) s = 0 for every t.
  bool annihilated = false;
  /// rank of the copies (x^j (x) 1) s.
  std::size_t independent_rank = 0;
  std::size_t expected_rank = 0;
  bool holds() const { return annihilated && independent_rank == expected_rank; }
};

ExactnessReport exactness_report(const QciAlgebra& algebra);
inline bool check_exactness_claim(const QciAlgebra& algebra) { return exactness_report(algebra).holds(); }

/// The window (_psi A_1)^c --d1--> _psi A_1 --d0--> _psi A_1 whose middle
/// homology is the Tate degree-0 homology with coefficients _psi A_1.
/// The source of d1 has blocks w = 1..c, index monomial + dim A * w.
class ZeromapsWindow {
 public:
  /// Matrices from the closed formulas.
  static ZeromapsWindow from_formulas(const QciAlgebra& algebra, const DiagonalTwist& psi);
  /// Matrices from the right A^e action b.(l (x) r) = psi(r) b l applied to
  /// 1 (x) x_w - x_w (x) 1 and to s.
  static ZeromapsWindow from_enveloping(const QciAlgebra& algebra, const DiagonalTwist& psi);

  const SparseMatrix& d1() const { return d1_; }
  const SparseMatrix& d0() const { return d0_; }
  const DiagonalTwist& twist() const { return psi_; }

  /// The three-term window in homological degrees 1, 0, -1.
  ChainComplexWindow window() const;
  /// dim ker d0 - rank d1.
  std::size_t homology(const RankOptions& options = {}) const;

 private:
  ZeromapsWindow(DiagonalTwist psi, SparseMatrix d1, SparseMatrix d0);
  DiagonalTwist psi_;
  SparseMatrix d1_;
  SparseMatrix d0_;
};

/// prod_w (1 + alpha_w + ... + alpha_w^{a_w - 1}).
Scalar alpha_bar(const QciAlgebra& algebra, const DiagonalTwist& psi);

/// Tate-Hochschild homology in degree 0 with coefficients _psi A_1.
std::size_t tate_hh0(const QciAlgebra& algebra, const DiagonalTwist& psi);

}  // namespace tatehh
