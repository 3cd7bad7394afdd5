#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tatehh/field.hpp"
#include "tatehh/sparse.hpp"

namespace tatehh {

/// Defining data of the quantum complete intersection
///   k<X_1..X_c> / (X_i^{a_i}, X_i X_j - q_ij X_j X_i).
/// Generators are numbered from 0 in code: generator w is x_{w+1}.
struct QciSpec {
  FieldSpec field = FieldSpec::rational();
  std::vector<int> exponents;
  /// Row-major c x c commutation matrix.
  std::vector<Scalar> q;

  std::size_t generators() const { return exponents.size(); }
  const Scalar& q_at(std::size_t i, std::size_t j) const { return q[i * generators() + j]; }

  /// ValidationError naming the offending entry when a_i < 2, q_ii != 1 or
  /// q_ij q_ji != 1.
  void validate() const;

  /// Validated construction from a commutation matrix given as rows.
  static QciSpec make(const FieldSpec& field, std::vector<int> exponents, const std::vector<std::vector<Scalar>>& q);
  /// k[X_1..X_c]/(X_i^{a_i}).
  static QciSpec commutative(const FieldSpec& field, std::vector<int> exponents);
  /// Exterior algebra on c generators.
  static QciSpec exterior(const FieldSpec& field, std::size_t c);
  /// k<X,Y>/(X^a, XY - qYX, Y^b) with x = x_1 (exponent a) and y = x_2 (exponent b).
  static QciSpec codim2(const FieldSpec& field, int a, int b, const Scalar& q);

  friend bool operator==(const QciSpec&, const QciSpec&) = default;
};

/// An automorphism x_i -> alpha_i x_i.
class DiagonalTwist {
 public:
  /// DomainError if some alpha is zero.
  explicit DiagonalTwist(std::vector<Scalar> alphas);
  static DiagonalTwist identity(const FieldSpec& field, std::size_t c);

  const std::vector<Scalar>& alphas() const { return alphas_; }
  const Scalar& alpha(std::size_t w) const { return alphas_[w]; }
  std::size_t generators() const { return alphas_.size(); }
  bool is_identity() const;

  /// Composition (componentwise product; diagonal twists commute).
  DiagonalTwist compose(const DiagonalTwist& other) const;
  DiagonalTwist inverse() const;
  DiagonalTwist pow(std::int64_t k) const;
  /// The scalar by which the twist multiplies the monomial with these exponents.
  Scalar on_monomial(std::span<const int> exps) const;

  std::string to_string() const;

  friend bool operator==(const DiagonalTwist&, const DiagonalTwist&) = default;

 private:
  std::vector<Scalar> alphas_;
};

namespace detail {
struct AlgebraData;
}

class AlgebraElement;

/// The algebra A_q^a with its monomial basis x_c^{i_c}...x_1^{i_1}, indexed in
/// mixed radix with i_1 fastest. Copies share the cached structure constants.
class QciAlgebra {
 public:
  explicit QciAlgebra(QciSpec spec);

  const QciSpec& spec() const;
  const FieldSpec& field() const { return spec().field; }
  std::size_t generators() const { return spec().generators(); }
  std::size_t dim() const;

  std::vector<int> exponents_of(std::size_t index) const;
  std::size_t index_of(std::span<const int> exps) const;
  /// Index of x_c^{a_c-1}...x_1^{a_1-1}.
  std::size_t top_index() const { return dim() - 1; }

  /// Normal form of a word of generators (left to right) by adjacent
  /// reordering. Returns the coefficient and basis index, or nullopt if the
  /// word vanishes.
  std::optional<std::pair<Scalar, std::size_t>> normal_form(std::span<const std::size_t> word) const;

  /// Product of two basis monomials from the cached table.
  struct Product {
    std::size_t index;  // valid only when nonzero
    Scalar coefficient;
    bool nonzero() const { return !coefficient.is_zero(); }
  };
  const Product& product(std::size_t left, std::size_t right) const;

  /// All (left, right, c) with left * right = c * target, c != 0.
  struct Factor {
    std::size_t left;
    std::size_t right;
    Scalar coefficient;
  };
  const std::vector<Factor>& factorizations(std::size_t target) const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis(std::size_t index) const;
  AlgebraElement generator(std::size_t w) const;

  friend bool operator==(const QciAlgebra& a, const QciAlgebra& b) { return a.data_ == b.data_ || a.spec() == b.spec(); }

 private:
  std::shared_ptr<const detail::AlgebraData> data_;
};

class AlgebraElement {
 public:
  AlgebraElement(QciAlgebra algebra, std::vector<Scalar> coeffs);

  const QciAlgebra& algebra() const { return algebra_; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  const Scalar& coefficient(std::size_t index) const { return coeffs_[index]; }
  bool is_zero() const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(const Scalar& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const Scalar& s, AlgebraElement a) { return a *= s; }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra_ == b.algebra_ && a.coeffs_ == b.coeffs_;
  }

 private:
  QciAlgebra algebra_;
  std::vector<Scalar> coeffs_;
};

/// Bilinear product in normal form. UsageError if u and v live in different algebras.
AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v);

/// Applies a diagonal twist to an element.
AlgebraElement apply_twist(const DiagonalTwist& f, const AlgebraElement& u);

/// nu^k where nu(x_w) = (prod_i q_iw^{a_i - 1}) x_w is the Nakayama
/// automorphism of the functional reading the top coefficient.
DiagonalTwist nakayama(const QciAlgebra& algebra, std::int64_t k = 1);

/// Coefficient of the top monomial.
Scalar frobenius_functional(const AlgebraElement& u);

/// A finite-dimensional bimodule given by its generator actions on a basis.
/// left[i] and right[i] are the matrices of b -> x_i b and b -> b x_i.
struct Bimodule {
  FieldSpec field = FieldSpec::rational();
  std::size_t dim = 0;
  std::vector<SparseMatrix> left;
  std::vector<SparseMatrix> right;

  friend bool operator==(const Bimodule&, const Bimodule&) = default;
};

/// Names the first violated bimodule relation, or nullopt if all hold.
std::optional<std::string> bimodule_violation(const QciAlgebra& algebra, const Bimodule& b);

/// Matrices of left and right multiplication by generator w on A.
SparseMatrix left_multiplication(const QciAlgebra& algebra, std::size_t w);
SparseMatrix right_multiplication(const QciAlgebra& algebra, std::size_t w);

/// The bimodule _f A _g: lambda . a . mu = f(lambda) a g(mu).
Bimodule twisted_bimodule(const QciAlgebra& algebra, const DiagonalTwist& f, const DiagonalTwist& g);
inline Bimodule regular_bimodule(const QciAlgebra& algebra) {
  const auto id = DiagonalTwist::identity(algebra.field(), algebra.generators());
  return twisted_bimodule(algebra, id, id);
}

/// The k-dual on the dual basis: x_i acts on the left by R_i^T and on the right by L_i^T.
Bimodule dual_bimodule(const Bimodule& b);

/// Both twists (f, g) when B's matrices equal those of _f A _g exactly.
std::optional<std::pair<DiagonalTwist, DiagonalTwist>> match_twisted(const QciAlgebra& algebra, const Bimodule& b);

/// A twist psi with B isomorphic to _psi A _1, found by direct matrix
/// equality with some _f A _g or, for a dual-basis presentation, after the
/// change of basis x -> phi(1)(- x) given by the Frobenius functional; the
/// pair is then normalized with _f A _g ~ _{f g^{-1}} A _1.
std::optional<DiagonalTwist> recognize_one_sided_twist(const QciAlgebra& algebra, const Bimodule& b);

/// Left and right action matrices of every basis monomial, precomputed for
/// the bar complex. Column b of left_of(m) is m . e_b.
class BimoduleActions {
 public:
  BimoduleActions(const QciAlgebra& algebra, const Bimodule& b);

  struct Entry {
    std::uint32_t index;
    Scalar value;
  };
  /// m . e_b as a sparse vector.
  const std::vector<Entry>& left(std::size_t monomial, std::size_t b) const { return left_[monomial * dim_ + b]; }
  /// e_b . m as a sparse vector.
  const std::vector<Entry>& right(std::size_t monomial, std::size_t b) const { return right_[monomial * dim_ + b]; }
  std::size_t dim() const { return dim_; }

 private:
  std::size_t dim_;
  std::vector<std::vector<Entry>> left_;
  std::vector<std::vector<Entry>> right_;
};

}  // namespace tatehh
