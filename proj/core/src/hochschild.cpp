#include "tatehh/hochschild.hpp"

#include <fstream>

#include "tatehh/errors.hpp"

namespace tatehh {

std::optional<std::size_t> bar_space_dim(std::size_t dim_b, std::size_t dim_a, int n) {
  if (n < 0) return std::nullopt;
  std::size_t out = dim_b;
  for (int i = 0; i < n; ++i) {
    if (dim_a != 0 && out > SIZE_MAX / dim_a) return std::nullopt;
    out *= dim_a;
  }
  return out;
}

namespace {

void require_space(std::size_t dim_b, std::size_t dim_a, int n, std::size_t budget) {
  const auto d = bar_space_dim(dim_b, dim_a, n);
  if (!d || *d > budget) {
    throw ResourceError("bar complex in degree " + std::to_string(n) + " needs " +
                        (d ? std::to_string(*d) : std::string("more than SIZE_MAX")) + " basis elements; budget is " +
                        std::to_string(budget));
  }
}

std::vector<std::size_t> powers(std::size_t base, int n) {
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) p[i] = p[i - 1] * base;
  return p;
}

void dump(const BarWindowRequest& req, const std::string& name, const SparseMatrix& m) {
  if (!req.dump_dir) return;
  std::filesystem::create_directories(*req.dump_dir);
  std::ofstream os(*req.dump_dir / name);
  if (!os) throw std::runtime_error("cannot write " + (*req.dump_dir / name).string());
  write_coordinate(os, m);
}

}  // namespace

SparseMatrix bar_homology_differential(const QciAlgebra& algebra, const BimoduleActions& b, int n) {
  if (n < 1) throw UsageError("homology differential needs n >= 1");
  const std::size_t d = algebra.dim();
  const std::size_t db = b.dim();
  const auto pw = powers(d, n);
  const std::size_t cols = db * pw[n];
  const std::size_t rows = db * pw[n - 1];
  const FieldSpec& field = algebra.field();
  ColumnAssembler out(field, rows, cols);
  const Scalar minus_one = Scalar::from_int(field, -1);
  std::vector<std::size_t> lam(n);
  for (std::size_t col = 0; col < cols; ++col) {
    const std::size_t e = col % db;
    std::size_t rest = col / db;
    for (int i = 0; i < n; ++i) {
      lam[i] = rest % d;
      rest /= d;
    }
    // b l_1 (x) l_2 ... l_n
    std::size_t tail = 0;
    for (int i = n - 1; i >= 1; --i) tail = tail * d + lam[i];
    for (const auto& entry : b.right(lam[0], e)) out.add(entry.index + db * tail, col, entry.value);
    // (-1)^i b (x) ... l_i l_{i+1} ...
    for (int i = 1; i < n; ++i) {
      const auto& p = algebra.product(lam[i - 1], lam[i]);
      if (!p.nonzero()) continue;
      std::size_t idx = 0;
      for (int j = n - 1; j >= 0; --j) {
        if (j == i) continue;
        idx = idx * d + (j == i - 1 ? p.index : lam[j]);
      }
      out.add(e + db * idx, col, (i % 2 == 0) ? p.coefficient : -p.coefficient);
    }
    // (-1)^n l_n b (x) l_1 ... l_{n-1}
    std::size_t head = 0;
    for (int i = n - 2; i >= 0; --i) head = head * d + lam[i];
    for (const auto& entry : b.left(lam[n - 1], e)) {
      out.add(entry.index + db * head, col, (n % 2 == 0) ? entry.value : entry.value * minus_one);
    }
  }
  return std::move(out).finish();
}

SparseMatrix bar_cohomology_differential(const QciAlgebra& algebra, const BimoduleActions& b, int n) {
  if (n < 0) throw UsageError("cohomology differential needs n >= 0");
  const std::size_t d = algebra.dim();
  const std::size_t db = b.dim();
  const auto pw = powers(d, n + 1);
  const std::size_t cols = db * pw[n];
  const std::size_t rows = db * pw[n + 1];
  const FieldSpec& field = algebra.field();
  ColumnAssembler out(field, rows, cols);
  std::vector<std::size_t> mu(n);
  std::vector<std::size_t> lam(n + 1);
  auto index_of = [&](std::size_t e, const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (std::size_t j = t.size(); j-- > 0;) idx = idx * d + t[j];
    return e + db * idx;
  };
  for (std::size_t col = 0; col < cols; ++col) {
    const std::size_t e = col % db;
    std::size_t rest = col / db;
    for (int i = 0; i < n; ++i) {
      mu[i] = rest % d;
      rest /= d;
    }
    // l_1 f(l_2 ... l_{n+1}) with (l_2..l_{n+1}) = mu
    for (int i = 0; i < n; ++i) lam[i + 1] = mu[i];
    for (std::size_t l = 0; l < d; ++l) {
      lam[0] = l;
      const std::size_t base = index_of(0, lam);
      for (const auto& entry : b.left(l, e)) out.add(base + entry.index, col, entry.value);
    }
    // (-1)^i f(... l_i l_{i+1} ...): l_i l_{i+1} must be a multiple of mu_i
    for (int i = 1; i <= n; ++i) {
      for (int j = 0; j < i - 1; ++j) lam[j] = mu[j];
      for (int j = i; j < n; ++j) lam[j + 1] = mu[j];
      for (const auto& f : algebra.factorizations(mu[i - 1])) {
        lam[i - 1] = f.left;
        lam[i] = f.right;
        out.add(index_of(e, lam), col, (i % 2 == 0) ? f.coefficient : -f.coefficient);
      }
    }
    // (-1)^{n+1} f(l_1 ... l_n) l_{n+1}
    for (int i = 0; i < n; ++i) lam[i] = mu[i];
    for (std::size_t l = 0; l < d; ++l) {
      lam[n] = l;
      const std::size_t base = index_of(0, lam);
      for (const auto& entry : b.right(l, e)) {
        out.add(base + entry.index, col, ((n + 1) % 2 == 0) ? entry.value : -entry.value);
      }
    }
  }
  return std::move(out).finish();
}

std::vector<std::size_t> hh_homology_dims(const BarWindowRequest& req) {
  if (req.direction != Direction::homology) throw UsageError("hh_homology_dims needs a homology request");
  if (req.n_max < 0) throw UsageError("n_max must be non-negative");
  const std::size_t d = req.algebra.dim();
  const std::size_t db = req.coefficients.dim;
  require_space(db, d, req.n_max + 1, req.budget);
  const BimoduleActions actions(req.algebra, req.coefficients);
  const FieldSpec& field = req.algebra.field();

  // degrees n_max+1 down to 0, then a zero space so that degree 0 is interior
  std::vector<std::size_t> dims;
  std::vector<SparseMatrix> maps;
  for (int n = req.n_max + 1; n >= 1; --n) {
    dims.push_back(*bar_space_dim(db, d, n));
    maps.push_back(bar_homology_differential(req.algebra, actions, n));
    dump(req, "homology_d" + std::to_string(n) + ".txt", maps.back());
  }
  dims.push_back(db);
  dims.push_back(0);
  maps.emplace_back(field, 0, db);
  const ChainComplexWindow window(req.n_max + 1, std::move(dims), std::move(maps), req.check_composition);
  const auto h = window.homology_dims(req.rank_options);
  std::vector<std::size_t> out;
  for (int n = 0; n <= req.n_max; ++n) out.push_back(h.at(n));
  return out;
}

std::vector<std::size_t> hh_cohomology_dims(const BarWindowRequest& req) {
  if (req.direction != Direction::cohomology) throw UsageError("hh_cohomology_dims needs a cohomology request");
  if (req.n_max < 0) throw UsageError("n_max must be non-negative");
  const std::size_t d = req.algebra.dim();
  const std::size_t db = req.coefficients.dim;
  require_space(db, d, req.n_max + 1, req.budget);
  const BimoduleActions actions(req.algebra, req.coefficients);
  const FieldSpec& field = req.algebra.field();

  // cochain degree n sits at homological degree -n
  std::vector<std::size_t> dims{0};
  std::vector<SparseMatrix> maps;
  maps.emplace_back(field, db, 0);
  for (int n = 0; n <= req.n_max; ++n) {
    dims.push_back(*bar_space_dim(db, d, n));
    maps.push_back(bar_cohomology_differential(req.algebra, actions, n));
    dump(req, "cohomology_d" + std::to_string(n) + ".txt", maps.back());
  }
  dims.push_back(*bar_space_dim(db, d, req.n_max + 1));
  const ChainComplexWindow window(1, std::move(dims), std::move(maps), req.check_composition);
  const auto h = window.homology_dims(req.rank_options);
  std::vector<std::size_t> out;
  for (int n = 0; n <= req.n_max; ++n) out.push_back(h.at(-n));
  return out;
}

}  // namespace tatehh
