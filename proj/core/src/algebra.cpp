#include "tatehh/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "tatehh/errors.hpp"

namespace tatehh {

// ---------------------------------------------------------------- QciSpec

void QciSpec::validate() const {
  const std::size_t c = generators();
  if (c == 0) throw ValidationError("at least one generator is required");
  if (q.size() != c * c) throw ValidationError("commutation matrix must be " + std::to_string(c) + "x" + std::to_string(c));
  for (std::size_t i = 0; i < c; ++i) {
    if (exponents[i] < 2) {
      throw ValidationError("exponent a_" + std::to_string(i + 1) + " = " + std::to_string(exponents[i]) + " < 2");
    }
  }
  for (const auto& s : q) {
    if (s.field() != field) throw ValidationError("commutation matrix entry outside " + field.to_string());
  }
  for (std::size_t i = 0; i < c; ++i) {
    if (!q_at(i, i).is_one()) throw ValidationError("q_" + std::to_string(i + 1) + std::to_string(i + 1) + " must be 1");
    for (std::size_t j = i + 1; j < c; ++j) {
      if (!(q_at(i, j) * q_at(j, i)).is_one()) {
        throw ValidationError("q_" + std::to_string(i + 1) + std::to_string(j + 1) + " * q_" + std::to_string(j + 1) +
                              std::to_string(i + 1) + " != 1 at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
      }
    }
  }
}

QciSpec QciSpec::make(const FieldSpec& field, std::vector<int> exponents, const std::vector<std::vector<Scalar>>& q) {
  QciSpec spec;
  spec.field = field;
  spec.exponents = std::move(exponents);
  for (const auto& row : q) {
    if (row.size() != q.size()) throw ValidationError("commutation matrix must be square");
    spec.q.insert(spec.q.end(), row.begin(), row.end());
  }
  if (q.size() != spec.exponents.size()) throw ValidationError("commutation matrix size differs from exponent count");
  spec.validate();
  return spec;
}

QciSpec QciSpec::commutative(const FieldSpec& field, std::vector<int> exponents) {
  const std::size_t c = exponents.size();
  std::vector<std::vector<Scalar>> q(c, std::vector<Scalar>(c, Scalar::one(field)));
  return make(field, std::move(exponents), q);
}

QciSpec QciSpec::exterior(const FieldSpec& field, std::size_t c) {
  std::vector<std::vector<Scalar>> q(c, std::vector<Scalar>(c, Scalar::from_int(field, -1)));
  for (std::size_t i = 0; i < c; ++i) q[i][i] = Scalar::one(field);
  return make(field, std::vector<int>(c, 2), q);
}

QciSpec QciSpec::codim2(const FieldSpec& field, int a, int b, const Scalar& q) {
  if (q.is_zero()) throw ValidationError("q must be nonzero");
  const Scalar one = Scalar::one(field);
  return make(field, {a, b}, {{one, q}, {q.inverse(), one}});
}

// ---------------------------------------------------------- DiagonalTwist

DiagonalTwist::DiagonalTwist(std::vector<Scalar> alphas) : alphas_(std::move(alphas)) {
  for (std::size_t w = 0; w < alphas_.size(); ++w) {
    if (alphas_[w].is_zero()) throw DomainError("twist component alpha_" + std::to_string(w + 1) + " is zero");
  }
}

DiagonalTwist DiagonalTwist::identity(const FieldSpec& field, std::size_t c) {
  return DiagonalTwist(std::vector<Scalar>(c, Scalar::one(field)));
}

bool DiagonalTwist::is_identity() const {
  return std::all_of(alphas_.begin(), alphas_.end(), [](const Scalar& a) { return a.is_one(); });
}

DiagonalTwist DiagonalTwist::compose(const DiagonalTwist& other) const {
  if (other.generators() != generators()) throw UsageError("twists on different generator counts");
  std::vector<Scalar> out(alphas_);
  for (std::size_t w = 0; w < out.size(); ++w) out[w] *= other.alphas_[w];
  return DiagonalTwist(std::move(out));
}

DiagonalTwist DiagonalTwist::inverse() const { return pow(-1); }

DiagonalTwist DiagonalTwist::pow(std::int64_t k) const {
  std::vector<Scalar> out;
  out.reserve(alphas_.size());
  for (const auto& a : alphas_) out.push_back(scalar_pow(a, k));
  return DiagonalTwist(std::move(out));
}

Scalar DiagonalTwist::on_monomial(std::span<const int> exps) const {
  if (exps.size() != alphas_.size()) throw UsageError("monomial and twist have different generator counts");
  Scalar out = Scalar::one(alphas_.front().field());
  for (std::size_t w = 0; w < exps.size(); ++w) {
    if (exps[w] != 0) out *= scalar_pow(alphas_[w], exps[w]);
  }
  return out;
}

std::string DiagonalTwist::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t w = 0; w < alphas_.size(); ++w) os << (w ? "," : "") << alphas_[w];
  os << ')';
  return os.str();
}

// ------------------------------------------------------------ QciAlgebra

namespace detail {

struct AlgebraData {
  QciSpec spec;
  std::size_t dim = 1;
  std::vector<std::size_t> stride;
  std::vector<QciAlgebra::Product> products;
  std::vector<std::vector<QciAlgebra::Factor>> factors;
};

}  // namespace detail

namespace {

std::vector<int> exponents_from_index(const detail::AlgebraData& d, std::size_t index) {
  std::vector<int> e(d.spec.generators());
  for (std::size_t w = 0; w < e.size(); ++w) {
    e[w] = static_cast<int>(index % static_cast<std::size_t>(d.spec.exponents[w]));
    index /= static_cast<std::size_t>(d.spec.exponents[w]);
  }
  return e;
}

// Bubble the word into descending generator order, x_i x_j -> q_ij x_j x_i
// whenever i < j stands to the left of j.
std::optional<std::pair<Scalar, std::size_t>> reduce_word(const detail::AlgebraData& d, std::vector<std::size_t> word) {
  const QciSpec& spec = d.spec;
  Scalar coef = Scalar::one(spec.field);
  for (std::size_t pass = 0; pass < word.size(); ++pass) {
    bool swapped = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      const std::size_t i = word[k];
      const std::size_t j = word[k + 1];
      if (i < j) {
        coef *= spec.q_at(i, j);
        std::swap(word[k], word[k + 1]);
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  std::vector<int> e(spec.generators(), 0);
  for (std::size_t g : word) {
    if (g >= e.size()) throw UsageError("generator index out of range");
    if (++e[g] >= spec.exponents[g]) return std::nullopt;
  }
  std::size_t index = 0;
  for (std::size_t w = 0; w < e.size(); ++w) index += static_cast<std::size_t>(e[w]) * d.stride[w];
  return std::make_pair(coef, index);
}

std::vector<std::size_t> word_of(const detail::AlgebraData& d, std::size_t index) {
  const auto e = exponents_from_index(d, index);
  std::vector<std::size_t> word;
  for (std::size_t w = e.size(); w-- > 0;) word.insert(word.end(), static_cast<std::size_t>(e[w]), w);
  return word;
}

}  // namespace

QciAlgebra::QciAlgebra(QciSpec spec) {
  spec.validate();
  auto d = std::make_shared<detail::AlgebraData>();
  d->spec = std::move(spec);
  for (int a : d->spec.exponents) {
    d->stride.push_back(d->dim);
    d->dim *= static_cast<std::size_t>(a);
  }
  const std::size_t n = d->dim;
  std::vector<std::vector<std::size_t>> words(n);
  for (std::size_t m = 0; m < n; ++m) words[m] = word_of(*d, m);
  d->products.reserve(n * n);
  d->factors.resize(n);
  const Scalar zero = Scalar::zero(d->spec.field);
  for (std::size_t l = 0; l < n; ++l) {
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<std::size_t> word = words[l];
      word.insert(word.end(), words[r].begin(), words[r].end());
      auto nf = reduce_word(*d, std::move(word));
      if (nf) {
        d->factors[nf->second].push_back({l, r, nf->first});
        d->products.push_back({nf->second, std::move(nf->first)});
      } else {
        d->products.push_back({0, zero});
      }
    }
  }
  data_ = std::move(d);
}

const QciSpec& QciAlgebra::spec() const { return data_->spec; }
std::size_t QciAlgebra::dim() const { return data_->dim; }

std::vector<int> QciAlgebra::exponents_of(std::size_t index) const {
  if (index >= dim()) throw UsageError("monomial index out of range");
  return exponents_from_index(*data_, index);
}

std::size_t QciAlgebra::index_of(std::span<const int> exps) const {
  if (exps.size() != generators()) throw UsageError("exponent vector has wrong length");
  std::size_t index = 0;
  for (std::size_t w = 0; w < exps.size(); ++w) {
    if (exps[w] < 0 || exps[w] >= spec().exponents[w]) throw UsageError("exponent out of range");
    index += static_cast<std::size_t>(exps[w]) * data_->stride[w];
  }
  return index;
}

std::optional<std::pair<Scalar, std::size_t>> QciAlgebra::normal_form(std::span<const std::size_t> word) const {
  return reduce_word(*data_, std::vector<std::size_t>(word.begin(), word.end()));
}

const QciAlgebra::Product& QciAlgebra::product(std::size_t left, std::size_t right) const {
  return data_->products[left * dim() + right];
}

const std::vector<QciAlgebra::Factor>& QciAlgebra::factorizations(std::size_t target) const {
  return data_->factors[target];
}

AlgebraElement QciAlgebra::zero() const {
  return AlgebraElement(*this, std::vector<Scalar>(dim(), Scalar::zero(field())));
}

AlgebraElement QciAlgebra::one() const { return basis(0); }

AlgebraElement QciAlgebra::basis(std::size_t index) const {
  if (index >= dim()) throw UsageError("monomial index out of range");
  std::vector<Scalar> c(dim(), Scalar::zero(field()));
  c[index] = Scalar::one(field());
  return AlgebraElement(*this, std::move(c));
}

AlgebraElement QciAlgebra::generator(std::size_t w) const {
  if (w >= generators()) throw UsageError("generator index out of range");
  return basis(data_->stride[w]);
}

// -------------------------------------------------------- AlgebraElement

AlgebraElement::AlgebraElement(QciAlgebra algebra, std::vector<Scalar> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_.dim()) throw UsageError("coefficient vector length differs from dim A");
  for (const auto& s : coeffs_) {
    if (s.field() != algebra_.field()) throw UsageError("coefficient outside the algebra's field");
  }
}

bool AlgebraElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_zero(); });
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  if (!(algebra_ == rhs.algebra_)) throw UsageError("elements of different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  if (!(algebra_ == rhs.algebra_)) throw UsageError("elements of different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) {
  if (!(u.algebra() == v.algebra())) throw UsageError("multiply: elements of different algebras");
  const QciAlgebra& alg = u.algebra();
  AlgebraElement out = alg.zero();
  std::vector<Scalar> acc(alg.dim(), Scalar::zero(alg.field()));
  for (std::size_t l = 0; l < alg.dim(); ++l) {
    if (u.coefficient(l).is_zero()) continue;
    for (std::size_t r = 0; r < alg.dim(); ++r) {
      if (v.coefficient(r).is_zero()) continue;
      const auto& p = alg.product(l, r);
      if (!p.nonzero()) continue;
      acc[p.index] += u.coefficient(l) * v.coefficient(r) * p.coefficient;
    }
  }
  return AlgebraElement(alg, std::move(acc));
}

AlgebraElement apply_twist(const DiagonalTwist& f, const AlgebraElement& u) {
  const QciAlgebra& alg = u.algebra();
  std::vector<Scalar> c(u.coefficients());
  for (std::size_t m = 0; m < alg.dim(); ++m) {
    if (!c[m].is_zero()) c[m] *= f.on_monomial(alg.exponents_of(m));
  }
  return AlgebraElement(alg, std::move(c));
}

DiagonalTwist nakayama(const QciAlgebra& algebra, std::int64_t k) {
  const QciSpec& spec = algebra.spec();
  std::vector<Scalar> alphas;
  for (std::size_t w = 0; w < spec.generators(); ++w) {
    Scalar a = Scalar::one(spec.field);
    // the i = w factor is q_ww^{a_w - 1} = 1
    for (std::size_t i = 0; i < spec.generators(); ++i) a *= scalar_pow(spec.q_at(i, w), spec.exponents[i] - 1);
    alphas.push_back(scalar_pow(a, k));
  }
  return DiagonalTwist(std::move(alphas));
}

Scalar frobenius_functional(const AlgebraElement& u) { return u.coefficient(u.algebra().top_index()); }

// ---------------------------------------------------------------- Bimodule

SparseMatrix left_multiplication(const QciAlgebra& algebra, std::size_t w) {
  std::vector<int> e(algebra.generators(), 0);
  e[w] = 1;
  const std::size_t gen_index = algebra.index_of(e);
  ColumnAssembler out(algebra.field(), algebra.dim(), algebra.dim());
  for (std::size_t m = 0; m < algebra.dim(); ++m) {
    const auto& p = algebra.product(gen_index, m);
    if (p.nonzero()) out.add(p.index, m, p.coefficient);
  }
  return std::move(out).finish();
}

SparseMatrix right_multiplication(const QciAlgebra& algebra, std::size_t w) {
  std::vector<int> e(algebra.generators(), 0);
  e[w] = 1;
  const std::size_t gen_index = algebra.index_of(e);
  ColumnAssembler out(algebra.field(), algebra.dim(), algebra.dim());
  for (std::size_t m = 0; m < algebra.dim(); ++m) {
    const auto& p = algebra.product(m, gen_index);
    if (p.nonzero()) out.add(p.index, m, p.coefficient);
  }
  return std::move(out).finish();
}

namespace {

SparseMatrix scaled(const SparseMatrix& m, const Scalar& s) {
  auto t = m.triplets();
  for (auto& e : t) e.value *= s;
  return SparseMatrix(m.field(), m.rows(), m.cols(), std::move(t));
}

SparseMatrix power(const SparseMatrix& m, int e) {
  SparseMatrix out = SparseMatrix::identity(m.field(), m.rows());
  for (int i = 0; i < e; ++i) out = multiply(out, m);
  return out;
}

}  // namespace

std::optional<std::string> bimodule_violation(const QciAlgebra& algebra, const Bimodule& b) {
  const QciSpec& spec = algebra.spec();
  const std::size_t c = spec.generators();
  if (b.left.size() != c || b.right.size() != c) return "bimodule needs one left and one right matrix per generator";
  for (std::size_t i = 0; i < c; ++i) {
    for (const auto* m : {&b.left[i], &b.right[i]}) {
      if (m->rows() != b.dim || m->cols() != b.dim) return "action matrix of generator " + std::to_string(i + 1) + " has wrong shape";
      if (m->field() != b.field || b.field != spec.field) return "action matrix over the wrong field";
    }
    if (!power(b.left[i], spec.exponents[i]).is_zero()) return "L_" + std::to_string(i + 1) + "^a != 0";
    if (!power(b.right[i], spec.exponents[i]).is_zero()) return "R_" + std::to_string(i + 1) + "^a != 0";
  }
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const std::string ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
      if (!(multiply(b.left[i], b.left[j]) == scaled(multiply(b.left[j], b.left[i]), spec.q_at(i, j)))) {
        return "L_i L_j != q_ij L_j L_i at (" + ij + ")";
      }
      if (!(multiply(b.right[j], b.right[i]) == scaled(multiply(b.right[i], b.right[j]), spec.q_at(i, j)))) {
        return "R_j R_i != q_ij R_i R_j at (" + ij + ")";
      }
      if (!(multiply(b.left[i], b.right[j]) == multiply(b.right[j], b.left[i]))) {
        return "L_i R_j != R_j L_i at (" + ij + ")";
      }
    }
  }
  return std::nullopt;
}

Bimodule twisted_bimodule(const QciAlgebra& algebra, const DiagonalTwist& f, const DiagonalTwist& g) {
  if (f.generators() != algebra.generators() || g.generators() != algebra.generators()) {
    throw UsageError("twist generator count differs from the algebra");
  }
  Bimodule b;
  b.field = algebra.field();
  b.dim = algebra.dim();
  for (std::size_t w = 0; w < algebra.generators(); ++w) {
    b.left.push_back(scaled(left_multiplication(algebra, w), f.alpha(w)));
    b.right.push_back(scaled(right_multiplication(algebra, w), g.alpha(w)));
  }
  return b;
}

Bimodule dual_bimodule(const Bimodule& b) {
  Bimodule d;
  d.field = b.field;
  d.dim = b.dim;
  for (const auto& r : b.right) d.left.push_back(r.transpose());
  for (const auto& l : b.left) d.right.push_back(l.transpose());
  return d;
}

std::optional<std::pair<DiagonalTwist, DiagonalTwist>> match_twisted(const QciAlgebra& algebra, const Bimodule& b) {
  if (b.dim != algebra.dim() || b.field != algebra.field() || b.left.size() != algebra.generators() ||
      b.right.size() != algebra.generators()) {
    return std::nullopt;
  }
  // Read alpha off the entry of x_w acting on 1, then demand exact equality.
  std::vector<Scalar> fa;
  std::vector<Scalar> ga;
  for (std::size_t w = 0; w < algebra.generators(); ++w) {
    std::vector<int> e(algebra.generators(), 0);
    e[w] = 1;
    const std::size_t gen = algebra.index_of(e);
    Scalar lf = b.left[w].at(gen, 0);
    Scalar rg = b.right[w].at(gen, 0);
    if (lf.is_zero() || rg.is_zero()) return std::nullopt;
    fa.push_back(std::move(lf));
    ga.push_back(std::move(rg));
  }
  DiagonalTwist f(std::move(fa));
  DiagonalTwist g(std::move(ga));
  if (!(twisted_bimodule(algebra, f, g) == b)) return std::nullopt;
  return std::make_pair(std::move(f), std::move(g));
}

std::optional<DiagonalTwist> recognize_one_sided_twist(const QciAlgebra& algebra, const Bimodule& b) {
  if (auto fg = match_twisted(algebra, b)) return fg->first.compose(fg->second.inverse());
  if (b.dim != algebra.dim()) return std::nullopt;
  // T(x)(y) = phi(1)(y x); column x of T has the single entry at the
  // complementary monomial for a quantum complete intersection.
  const std::size_t n = algebra.dim();
  std::vector<Triplet> t;
  std::vector<Triplet> t_inv;
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t hits = 0;
    for (std::size_t y = 0; y < n; ++y) {
      const auto& p = algebra.product(y, x);
      if (p.nonzero() && p.index == algebra.top_index()) {
        t.push_back({y, x, p.coefficient});
        t_inv.push_back({x, y, p.coefficient.inverse()});
        ++hits;
      }
    }
    if (hits != 1) return std::nullopt;
  }
  const SparseMatrix tm(algebra.field(), n, n, std::move(t));
  const SparseMatrix ti(algebra.field(), n, n, std::move(t_inv));
  Bimodule conj;
  conj.field = b.field;
  conj.dim = n;
  for (const auto& l : b.left) conj.left.push_back(multiply(ti, multiply(l, tm)));
  for (const auto& r : b.right) conj.right.push_back(multiply(ti, multiply(r, tm)));
  if (auto fg = match_twisted(algebra, conj)) return fg->first.compose(fg->second.inverse());
  return std::nullopt;
}

// ------------------------------------------------------- BimoduleActions

BimoduleActions::BimoduleActions(const QciAlgebra& algebra, const Bimodule& b) : dim_(b.dim) {
  if (auto bad = bimodule_violation(algebra, b)) throw ValidationError("invalid bimodule: " + *bad);
  const std::size_t n = algebra.dim();
  left_.resize(n * dim_);
  right_.resize(n * dim_);
  for (std::size_t m = 0; m < n; ++m) {
    const auto e = algebra.exponents_of(m);
    // m = x_c^{e_c}...x_1^{e_1}: L(m) = L_c^{e_c}...L_1^{e_1}, R(m) = R_1^{e_1}...R_c^{e_c}.
    SparseMatrix lm = SparseMatrix::identity(b.field, dim_);
    SparseMatrix rm = SparseMatrix::identity(b.field, dim_);
    for (std::size_t w = e.size(); w-- > 0;) lm = multiply(lm, power(b.left[w], e[w]));
    for (std::size_t w = 0; w < e.size(); ++w) rm = multiply(rm, power(b.right[w], e[w]));
    for (std::size_t col = 0; col < dim_; ++col) {
      for (std::size_t k = lm.col_begin(col); k < lm.col_end(col); ++k) {
        left_[m * dim_ + col].push_back({static_cast<std::uint32_t>(lm.row_index(k)), lm.value(k)});
      }
      for (std::size_t k = rm.col_begin(col); k < rm.col_end(col); ++k) {
        right_[m * dim_ + col].push_back({static_cast<std::uint32_t>(rm.row_index(k)), rm.value(k)});
      }
    }
  }
}

}  // namespace tatehh
