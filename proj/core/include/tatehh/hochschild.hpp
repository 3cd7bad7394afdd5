#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "tatehh/algebra.hpp"
#include "tatehh/sparse.hpp"

namespace tatehh {

/// Largest (dim B)(dim A)^{n+1} the bar complex may allocate by default.
inline constexpr std::size_t kDefaultBarBudget = 5'000'000;

enum class Direction { homology, cohomology };

struct BarWindowRequest {
  QciAlgebra algebra;
  Bimodule coefficients;
  int n_max = 0;
  Direction direction = Direction::homology;
  std::size_t budget = kDefaultBarBudget;
  /// Verify that adjacent differentials compose to zero.
  bool check_composition = true;
  RankOptions rank_options{};
  /// When set, every differential is written there in coordinate format.
  std::optional<std::filesystem::path> dump_dir;
};

/// dim B * (dim A)^n, or nullopt if it does not fit in size_t.
std::optional<std::size_t> bar_space_dim(std::size_t dim_b, std::size_t dim_a, int n);

/// Unnormalized bar differentials on the basis e_b (x) l_1 (x) ... (x) l_n,
/// b fastest then l_1, l_2, ... in mixed radix.
/// d_n : B (x) A^n -> B (x) A^{n-1}, n >= 1.
SparseMatrix bar_homology_differential(const QciAlgebra& algebra, const BimoduleActions& b, int n);
/// d^n : Hom(A^n, B) -> Hom(A^{n+1}, B), n >= 0, with the same indexing.
SparseMatrix bar_cohomology_differential(const QciAlgebra& algebra, const BimoduleActions& b, int n);

/// dim HH_n(A, B) for n = 0..n_max. ResourceError if the budget is exceeded.
std::vector<std::size_t> hh_homology_dims(const BarWindowRequest& req);
/// dim HH^n(A, B) for n = 0..n_max. ResourceError if the budget is exceeded.
std::vector<std::size_t> hh_cohomology_dims(const BarWindowRequest& req);

}  // namespace tatehh
