#include "tatehh/codim2_complex.hpp"

#include "tatehh/errors.hpp"

namespace tatehh {

namespace {

// 2 * half must be even before halving
std::int64_t halve(std::int64_t twice, const char* what) {
  if (twice % 2 != 0) throw UsageError(std::string("non-integral exponent in ") + what);
  return twice / 2;
}

}  // namespace

KScalarTable::KScalarTable(FieldSpec field, int a, int b, Scalar q)
    : field_(std::move(field)), a_(a), b_(b), q_(std::move(q)) {
  if (a < 2 || b < 2) throw ValidationError("exponents must be at least 2");
  if (q_.field() != field_) throw UsageError("q outside the field");
}

Scalar KScalarTable::geometric(int terms, std::int64_t step) const {
  Scalar sum = Scalar::zero(field_);
  const Scalar ratio = q_pow(step);
  Scalar power = Scalar::one(field_);
  for (int j = 0; j < terms; ++j) {
    sum += power;
    power *= ratio;
  }
  return sum;
}

Scalar KScalarTable::k(int m, int t, int i, int u, int v) const {
  if (t < 0 || i < 0 || u < 0 || v < 0) throw UsageError("K parameters must be non-negative");
  const std::int64_t a = a_;
  const std::int64_t b = b_;
  const bool even = i % 2 == 0;
  auto need = [&](bool ok) {
    if (!ok) {
      throw UsageError("K_" + std::to_string(m) + " side condition fails at t=" + std::to_string(t) +
                       ", i=" + std::to_string(i));
    }
  };
  const Scalar one = Scalar::one(field_);
  switch (m) {
    case 1:
      need(even && i <= 2 * t);
      return q_pow(a + b - a * b - 1) * geometric(b_, a + halve(a * i, "K_1") + v - 1);
    case 2:
      need(even && i <= 2 * t);
      return geometric(a_, b * t + b - halve(b * i, "K_2") + u - 1);
    case 3:
      need(!even && i <= 2 * t - 1);
      return q_pow(halve(a * i - a + 2 + 2 * v, "K_3")) - q_pow(1 - a);
    case 4:
      need(!even && i <= 2 * t - 1);
      return q_pow(halve(2 * b * t - b * i + b + 2 * u, "K_4")) - one;
    case 5:
      need(even && i <= 2 * t);
      return q_pow(1 - a) - q_pow(halve(a * i + 2 * v, "K_5"));
    case 6:
      need(even && i <= 2 * t);
      return geometric(a_, b * t + b - halve(b * i, "K_6") + u);
    case 7:
      need(!even && i <= 2 * t + 1);
      return q_pow(a + b - a * b - 1) * geometric(b_, a + halve(a * (i - 1), "K_7") + v);
    case 8:
      need(!even && i <= 2 * t + 1);
      return q_pow(halve(2 * b * t - b * i + 3 * b + 2 * u - 2, "K_8")) - one;
    default:
      throw UsageError("K index must be 1..8");
  }
}

Codim2Params codim2_params(const QciSpec& spec) {
  if (spec.generators() != 2) throw HypothesisError("the delta complex needs exactly two generators");
  if (!spec.field.is_rational()) {
    throw HypothesisError("the delta complex needs q not a root of unity; excluded over " + spec.field.to_string());
  }
  const Scalar& q = spec.q_at(0, 1);
  if (!assert_not_root_of_unity(q, spec.field)) throw HypothesisError("q = " + q.to_string() + " is a root of unity");
  return {spec.exponents[0], spec.exponents[1], q};
}

DeltaComplex::DeltaComplex(const QciSpec& spec, int max_degree, Signs signs)
    : k_([&] {
        const auto p = codim2_params(spec);
        return KScalarTable(spec.field, p.a, p.b, p.q);
      }()),
      signs_(signs),
      ab_(static_cast<std::size_t>(spec.exponents[0]) * static_cast<std::size_t>(spec.exponents[1])) {
  if (max_degree < 1) throw UsageError("the delta complex needs max degree >= 1");
  deltas_.reserve(static_cast<std::size_t>(max_degree));
  for (int n = 1; n <= max_degree; ++n) deltas_.push_back(build(n));
}

const SparseMatrix& DeltaComplex::delta(int n) const {
  if (n < 1 || n > max_degree()) throw UsageError("delta_" + std::to_string(n) + " outside the built range");
  return deltas_[static_cast<std::size_t>(n - 1)];
}

SparseMatrix DeltaComplex::build(int n) const {
  const int a = k_.a();
  const int b = k_.b();
  const int t = n / 2;
  const bool even_n = n % 2 == 0;
  ColumnAssembler out(k_.field(), space_dim(n - 1), space_dim(n));
  auto index = [&](int u, int v, int i) {
    return static_cast<std::size_t>(v + a * u) + ab_ * static_cast<std::size_t>(i);
  };
  auto emit = [&](std::size_t col, const Scalar& k, int u, int v, int i) {
    // zero outside the monomial range and at e_{-1}, e_n of the target
    if (u >= b || v >= a || i < 0 || i > n - 1) return;
    if (k.is_zero()) throw HypothesisError("vanishing K-scalar in delta_" + std::to_string(n));
    out.add(index(u, v, i), col, k);
  };
  for (int i = 0; i <= n; ++i) {
    const bool even_i = i % 2 == 0;
    for (int u = 0; u < b; ++u) {
      for (int v = 0; v < a; ++v) {
        const std::size_t col = index(u, v, i);
        if (even_n && even_i) {
          emit(col, k_.k(1, t, i, u, v), u + b - 1, v, i);
          emit(col, k_.k(2, t, i, u, v), u, v + a - 1, i - 1);
        } else if (even_n) {
          emit(col, k_.k(3, t, i, u, v), u + 1, v, i);
          emit(col, k_.k(4, t, i, u, v), u, v + 1, i - 1);
        } else if (even_i) {
          emit(col, k_.k(5, t, i, u, v), u + 1, v, i);
          emit(col, k_.k(6, t, i, u, v), u, v + a - 1, i - 1);
        } else {
          const Scalar k7 = k_.k(7, t, i, u, v);
          emit(col, signs_ == Signs::literal ? k7 : -k7, u + b - 1, v, i);
          emit(col, k_.k(8, t, i, u, v), u, v + 1, i - 1);
        }
      }
    }
  }
  return std::move(out).finish();
}

bool DeltaComplex::composition_is_zero() const {
  for (int n = 1; n < max_degree(); ++n) {
    if (!multiply(delta(n), delta(n + 1)).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> twisted_homology_dims(const QciSpec& spec, int max_degree) {
  if (max_degree < 2) throw UsageError("twisted homology needs max degree >= 2");
  const DeltaComplex complex(spec, max_degree);
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> maps;
  for (int n = max_degree; n >= 1; --n) {
    dims.push_back(complex.space_dim(n));
    maps.push_back(complex.delta(n));
  }
  dims.push_back(complex.space_dim(0));
  const ChainComplexWindow window(max_degree, std::move(dims), std::move(maps));
  std::vector<std::size_t> out;
  for (int n = 1; n < max_degree; ++n) out.push_back(window.homology_dim(n));
  return out;
}

std::vector<std::size_t> kernel_dims(const QciSpec& spec, int max_degree) {
  const DeltaComplex complex(spec, max_degree);
  std::vector<std::size_t> out;
  for (int n = 1; n <= max_degree; ++n) out.push_back(kernel_dim(complex.delta(n)));
  return out;
}

}  // namespace tatehh
