#pragma once

// Slow reference implementations the library is checked against. None of
// these share code with the library beyond Scalar arithmetic.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "tatehh/algebra.hpp"
#include "tatehh/field.hpp"
#include "tatehh/sparse.hpp"

namespace oracle {

using tatehh::FieldSpec;
using tatehh::Scalar;

using Dense = std::vector<std::vector<Scalar>>;

inline Dense to_dense(const tatehh::SparseMatrix& m) {
  Dense d(m.rows(), std::vector<Scalar>(m.cols(), Scalar::zero(m.field())));
  for (const auto& t : m.triplets()) d[t.row][t.col] = t.value;
  return d;
}

// Plain row reduction, first nonzero pivot.
inline std::size_t dense_rank(Dense d, const FieldSpec& field) {
  const std::size_t rows = d.size();
  if (rows == 0) return 0;
  const std::size_t cols = d[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && d[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(d[piv], d[r]);
    const Scalar inv = d[r][c].inverse();
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (d[i][c].is_zero()) continue;
      const Scalar f = d[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) d[i][j] -= f * d[r][j];
    }
    ++r;
  }
  (void)field;
  return r;
}

inline std::size_t dense_rank(const tatehh::SparseMatrix& m) { return dense_rank(to_dense(m), m.field()); }

// A random nonzero-ish scalar drawn from a small range.
inline Scalar small_scalar(const FieldSpec& field, std::mt19937_64& rng, int range = 3) {
  std::uniform_int_distribution<int> dist(-range, range);
  if (field.is_prime()) {
    const auto p = static_cast<std::int64_t>(field.characteristic());
    return Scalar::residue(field, static_cast<std::uint64_t>(((dist(rng) % p) + p) % p));
  }
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar::from_fraction(field, dist(rng), den(rng));
}

inline tatehh::SparseMatrix random_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                          double density, std::mt19937_64& rng) {
  std::bernoulli_distribution keep(density);
  std::vector<tatehh::Triplet> t;
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r)
      if (keep(rng)) t.push_back({r, c, small_scalar(field, rng)});
  return tatehh::SparseMatrix(field, rows, cols, std::move(t));
}

// Word rewriting: repeatedly replace the leftmost x_i x_j (i < j) by
// q_ij x_j x_i, then kill any run of a_i equal letters. Generators 0-based,
// normal form has larger indices first.
inline std::optional<std::pair<Scalar, std::vector<int>>> rewrite(const tatehh::QciSpec& spec,
                                                                  std::vector<std::size_t> word) {
  Scalar coeff = Scalar::one(spec.field);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
      if (word[k] < word[k + 1]) {
        coeff *= spec.q_at(word[k], word[k + 1]);
        std::swap(word[k], word[k + 1]);
        changed = true;
        break;
      }
    }
  }
  std::vector<int> exps(spec.generators(), 0);
  for (auto w : word) ++exps[w];
  for (std::size_t w = 0; w < spec.generators(); ++w)
    if (exps[w] >= spec.exponents[w]) return std::nullopt;
  return std::make_pair(coeff, exps);
}

inline std::vector<std::size_t> word_of(const std::vector<int>& exps) {
  std::vector<std::size_t> w;
  for (std::size_t g = exps.size(); g-- > 0;)
    for (int e = 0; e < exps[g]; ++e) w.push_back(g);
  return w;
}

// Structure constants from the closed formula: moving x_w^{j_w} of the right
// factor past x_v^{i_v} of the left factor for v < w costs q_vw^{i_v j_w}.
inline std::optional<std::pair<Scalar, std::vector<int>>> closed_product(const tatehh::QciSpec& spec,
                                                                         const std::vector<int>& i,
                                                                         const std::vector<int>& j) {
  const std::size_t c = spec.generators();
  std::vector<int> e(c);
  for (std::size_t w = 0; w < c; ++w) {
    e[w] = i[w] + j[w];
    if (e[w] >= spec.exponents[w]) return std::nullopt;
  }
  Scalar coeff = Scalar::one(spec.field);
  for (std::size_t v = 0; v < c; ++v)
    for (std::size_t w = v + 1; w < c; ++w) coeff *= tatehh::scalar_pow(spec.q_at(v, w), std::int64_t{i[v]} * j[w]);
  return std::make_pair(coeff, e);
}

// dim A / [A, A], spanning uv - vu over basis pairs.
inline std::size_t cocenter_dim(const tatehh::QciAlgebra& a) {
  const std::size_t n = a.dim();
  Dense rows;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const auto d = multiply(a.basis(u), a.basis(v)) - multiply(a.basis(v), a.basis(u));
      if (!d.is_zero()) rows.push_back(d.coefficients());
    }
  }
  return n - dense_rank(rows, a.field());
}

// dim Z(A): solve z x_w = x_w z for every generator.
inline std::size_t center_dim(const tatehh::QciAlgebra& a) {
  const std::size_t n = a.dim();
  Dense eqs;
  for (std::size_t w = 0; w < a.generators(); ++w) {
    // Column k of the system is basis element k; row r is the coefficient
    // of basis r in [e_k, x_w].
    std::vector<tatehh::AlgebraElement> images;
    for (std::size_t k = 0; k < n; ++k)
      images.push_back(multiply(a.basis(k), a.generator(w)) - multiply(a.generator(w), a.basis(k)));
    for (std::size_t r = 0; r < n; ++r) {
      std::vector<Scalar> row(n, Scalar::zero(a.field()));
      for (std::size_t k = 0; k < n; ++k) row[k] = images[k].coefficient(r);
      eqs.push_back(std::move(row));
    }
  }
  return n - dense_rank(eqs, a.field());
}

}  // namespace oracle
