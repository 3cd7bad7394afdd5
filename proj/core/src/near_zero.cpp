#include "tatehh/near_zero.hpp"

#include <algorithm>

#include "tatehh/errors.hpp"

namespace tatehh {

EnvelopingElement::EnvelopingElement(QciAlgebra algebra, std::vector<Scalar> coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != algebra_.dim() * algebra_.dim()) throw UsageError("enveloping element needs (dim A)^2 coefficients");
}

EnvelopingElement EnvelopingElement::zero(const QciAlgebra& algebra) {
  return EnvelopingElement(algebra, std::vector<Scalar>(algebra.dim() * algebra.dim(), Scalar::zero(algebra.field())));
}

EnvelopingElement EnvelopingElement::pure(const QciAlgebra& algebra, std::size_t left, std::size_t right, const Scalar& c) {
  auto out = zero(algebra);
  out.coeffs_.at(left + algebra.dim() * right) = c;
  return out;
}

std::size_t EnvelopingElement::nonzero_terms() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

bool EnvelopingElement::is_zero() const { return nonzero_terms() == 0; }

EnvelopingElement& EnvelopingElement::operator+=(const EnvelopingElement& rhs) {
  if (!(algebra_ == rhs.algebra_)) throw UsageError("enveloping elements of different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

EnvelopingElement& EnvelopingElement::operator-=(const EnvelopingElement& rhs) {
  if (!(algebra_ == rhs.algebra_)) throw UsageError("enveloping elements of different algebras");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

EnvelopingElement multiply(const EnvelopingElement& u, const EnvelopingElement& v) {
  if (!(u.algebra() == v.algebra())) throw UsageError("multiply: enveloping elements of different algebras");
  const QciAlgebra& alg = u.algebra();
  const std::size_t d = alg.dim();
  auto out = EnvelopingElement::zero(alg);
  std::vector<Scalar> acc(out.coefficients());
  for (std::size_t i = 0; i < d * d; ++i) {
    const Scalar& cu = u.coefficients()[i];
    if (cu.is_zero()) continue;
    const std::size_t l = i % d;
    const std::size_t r = i / d;
    for (std::size_t k = 0; k < d * d; ++k) {
      const Scalar& cv = v.coefficients()[k];
      if (cv.is_zero()) continue;
      const auto& left = alg.product(l, k % d);
      if (!left.nonzero()) continue;
      const auto& right = alg.product(k / d, r);
      if (!right.nonzero()) continue;
      acc[left.index + d * right.index] += cu * cv * left.coefficient * right.coefficient;
    }
  }
  return EnvelopingElement(alg, std::move(acc));
}

EnvelopingElement build_s(const QciAlgebra& algebra) {
  const QciSpec& spec = algebra.spec();
  const std::size_t c = spec.generators();
  auto s = EnvelopingElement::zero(algebra);
  std::vector<Scalar> coeffs(s.coefficients());
  for (std::size_t m = 0; m < algebra.dim(); ++m) {
    const auto i = algebra.exponents_of(m);
    std::vector<int> comp(c);
    for (std::size_t w = 0; w < c; ++w) comp[w] = spec.exponents[w] - i[w] - 1;
    Scalar coef = Scalar::one(spec.field);
    for (std::size_t u = 0; u < c; ++u) {
      for (std::size_t v = u + 1; v < c; ++v) {
        const std::int64_t e = -static_cast<std::int64_t>(i[v]) * comp[u];
        if (e != 0) coef *= scalar_pow(spec.q_at(u, v), e);
      }
    }
    coeffs[m + algebra.dim() * algebra.index_of(comp)] = coef;
  }
  return EnvelopingElement(algebra, std::move(coeffs));
}

ExactnessReport exactness_report(const QciAlgebra& algebra) {
  const std::size_t d = algebra.dim();
  const Scalar one = Scalar::one(algebra.field());
  const auto s = build_s(algebra);
  ExactnessReport report;
  report.annihilated = true;
  for (std::size_t t = 0; t < algebra.generators(); ++t) {
    const std::size_t g = algebra.index_of([&] {
      std::vector<int> e(algebra.generators(), 0);
      e[t] = 1;
      return e;
    }());
    const auto f = EnvelopingElement::pure(algebra, 0, g, one) - EnvelopingElement::pure(algebra, g, 0, one);
    if (!multiply(f, s).is_zero()) report.annihilated = false;
  }
  std::vector<Triplet> entries;
  for (std::size_t j = 0; j < d; ++j) {
    const auto copy = multiply(EnvelopingElement::pure(algebra, j, 0, one), s);
    for (std::size_t k = 0; k < d * d; ++k) {
      if (!copy.coefficients()[k].is_zero()) entries.push_back({k, j, copy.coefficients()[k]});
    }
  }
  report.independent_rank = rank(SparseMatrix(algebra.field(), d * d, d, std::move(entries)));
  report.expected_rank = d;
  return report;
}

// ------------------------------------------------------------ zeromaps

Scalar alpha_bar(const QciAlgebra& algebra, const DiagonalTwist& psi) {
  Scalar out = Scalar::one(algebra.field());
  for (std::size_t w = 0; w < algebra.generators(); ++w) {
    Scalar sum = Scalar::zero(algebra.field());
    Scalar power = Scalar::one(algebra.field());
    for (int k = 0; k < algebra.spec().exponents[w]; ++k) {
      sum += power;
      power *= psi.alpha(w);
    }
    out *= sum;
  }
  return out;
}

ZeromapsWindow::ZeromapsWindow(DiagonalTwist psi, SparseMatrix d1, SparseMatrix d0)
    : psi_(std::move(psi)), d1_(std::move(d1)), d0_(std::move(d0)) {}

ZeromapsWindow ZeromapsWindow::from_formulas(const QciAlgebra& algebra, const DiagonalTwist& psi) {
  const QciSpec& spec = algebra.spec();
  const std::size_t c = spec.generators();
  const std::size_t d = algebra.dim();
  if (psi.generators() != c) throw UsageError("twist generator count differs from the algebra");
  ColumnAssembler d1(spec.field, d, c * d);
  for (std::size_t w = 0; w < c; ++w) {
    for (std::size_t m = 0; m < d; ++m) {
      auto u = algebra.exponents_of(m);
      Scalar left = psi.alpha(w);
      for (std::size_t i = w; i < c; ++i) left *= scalar_pow(spec.q_at(w, i), u[i]);
      Scalar right = Scalar::one(spec.field);
      for (std::size_t j = 0; j <= w; ++j) right *= scalar_pow(spec.q_at(j, w), u[j]);
      if (u[w] + 1 == spec.exponents[w]) continue;
      ++u[w];
      d1.add(algebra.index_of(u), m + d * w, left - right);
    }
  }
  ColumnAssembler d0(spec.field, d, d);
  d0.add(algebra.top_index(), 0, alpha_bar(algebra, psi));
  return ZeromapsWindow(psi, std::move(d1).finish(), std::move(d0).finish());
}

namespace {

// m . (sum c l (x) r) = sum c psi(r) m l
std::vector<Scalar> act(const QciAlgebra& algebra, const DiagonalTwist& psi, std::size_t m, const EnvelopingElement& e) {
  const std::size_t d = algebra.dim();
  std::vector<Scalar> out(d, Scalar::zero(algebra.field()));
  for (std::size_t k = 0; k < d * d; ++k) {
    const Scalar& coef = e.coefficients()[k];
    if (coef.is_zero()) continue;
    const std::size_t l = k % d;
    const std::size_t r = k / d;
    const auto& rm = algebra.product(r, m);
    if (!rm.nonzero()) continue;
    const auto& rml = algebra.product(rm.index, l);
    if (!rml.nonzero()) continue;
    out[rml.index] += coef * psi.on_monomial(algebra.exponents_of(r)) * rm.coefficient * rml.coefficient;
  }
  return out;
}

}  // namespace

ZeromapsWindow ZeromapsWindow::from_enveloping(const QciAlgebra& algebra, const DiagonalTwist& psi) {
  const std::size_t c = algebra.generators();
  const std::size_t d = algebra.dim();
  if (psi.generators() != c) throw UsageError("twist generator count differs from the algebra");
  const Scalar one = Scalar::one(algebra.field());
  ColumnAssembler d1(algebra.field(), d, c * d);
  for (std::size_t w = 0; w < c; ++w) {
    std::vector<int> e(c, 0);
    e[w] = 1;
    const std::size_t g = algebra.index_of(e);
    const auto f = EnvelopingElement::pure(algebra, 0, g, one) - EnvelopingElement::pure(algebra, g, 0, one);
    for (std::size_t m = 0; m < d; ++m) {
      const auto col = act(algebra, psi, m, f);
      for (std::size_t r = 0; r < d; ++r) {
        if (!col[r].is_zero()) d1.add(r, m + d * w, col[r]);
      }
    }
  }
  const auto s = build_s(algebra);
  ColumnAssembler d0(algebra.field(), d, d);
  for (std::size_t m = 0; m < d; ++m) {
    const auto col = act(algebra, psi, m, s);
    for (std::size_t r = 0; r < d; ++r) {
      if (!col[r].is_zero()) d0.add(r, m, col[r]);
    }
  }
  return ZeromapsWindow(psi, std::move(d1).finish(), std::move(d0).finish());
}

ChainComplexWindow ZeromapsWindow::window() const {
  return ChainComplexWindow(1, {d1_.cols(), d1_.rows(), d0_.rows()}, {d1_, d0_});
}

std::size_t ZeromapsWindow::homology(const RankOptions& options) const { return window().homology_dim(0, options); }

std::size_t tate_hh0(const QciAlgebra& algebra, const DiagonalTwist& psi) {
  return ZeromapsWindow::from_formulas(algebra, psi).homology();
}

}  // namespace tatehh
