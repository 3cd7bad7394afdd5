#include "tatehh/sparse.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "elimination.hpp"
#include "tatehh/errors.hpp"

namespace tatehh {

namespace {

// 2^61 - 1, the modulus of the rational pre-pass.
constexpr std::uint64_t kPrepassPrime = (1ULL << 61) - 1;

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

}  // namespace

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), col_start_(cols + 1, 0) {}

SparseMatrix::SparseMatrix(FieldSpec field, std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : SparseMatrix(field, rows, cols) {
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw UsageError("entry (" + std::to_string(t.row) + "," + std::to_string(t.col) + ") outside " +
                       shape(rows, cols));
    }
    if (t.value.field() != field) throw UsageError("entry field differs from matrix field");
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  row_idx_.reserve(entries.size());
  values_.reserve(entries.size());
  std::size_t k = 0;
  while (k < entries.size()) {
    Scalar sum = std::move(entries[k].value);
    const std::size_t r = entries[k].row;
    const std::size_t c = entries[k].col;
    ++k;
    while (k < entries.size() && entries[k].row == r && entries[k].col == c) {
      sum += entries[k].value;
      ++k;
    }
    if (sum.is_zero()) continue;
    row_idx_.push_back(r);
    values_.push_back(std::move(sum));
    ++col_start_[c + 1];
  }
  std::partial_sum(col_start_.begin(), col_start_.end(), col_start_.begin());
}

SparseMatrix SparseMatrix::identity(const FieldSpec& field, std::size_t n) {
  std::vector<Triplet> t;
  t.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Scalar::one(field)});
  return SparseMatrix(field, n, n, std::move(t));
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw UsageError("index outside " + shape(rows_, cols_));
  auto first = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_start_[col]);
  auto last = row_idx_.begin() + static_cast<std::ptrdiff_t>(col_start_[col + 1]);
  auto it = std::lower_bound(first, last, row);
  if (it == last || *it != row) return Scalar::zero(field_);
  return values_[static_cast<std::size_t>(it - row_idx_.begin())];
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t k = col_start_[c]; k < col_start_[c + 1]; ++k) out.push_back({row_idx_[k], c, values_[k]});
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<Triplet> t = triplets();
  for (auto& e : t) std::swap(e.row, e.col);
  return SparseMatrix(field_, cols_, rows_, std::move(t));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.col_start_ == b.col_start_ &&
         a.row_idx_ == b.row_idx_ && a.values_ == b.values_;
}

ColumnAssembler::ColumnAssembler(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {}

void ColumnAssembler::add(std::size_t row, std::size_t col, const Scalar& value) {
  if (!value.is_zero()) entries_.push_back({row, col, value});
}

SparseMatrix ColumnAssembler::finish() && { return SparseMatrix(field_, rows_, cols_, std::move(entries_)); }

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.field() != b.field()) throw UsageError("multiply: field mismatch");
  if (a.cols() != b.rows()) {
    throw UsageError("multiply: shapes " + shape(a.rows(), a.cols()) + " and " + shape(b.rows(), b.cols()));
  }
  std::vector<Triplet> out;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t k = b.col_begin(c); k < b.col_end(c); ++k) {
      const std::size_t mid = b.row_index(k);
      for (std::size_t l = a.col_begin(mid); l < a.col_end(mid); ++l) {
        out.push_back({a.row_index(l), c, a.value(l) * b.value(k)});
      }
    }
  }
  return SparseMatrix(a.field(), a.rows(), b.cols(), std::move(out));
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// A connected block of the row/column incidence graph, rows oriented along
// the smaller side.
struct Block {
  std::vector<std::size_t> lines;      // original indices of the eliminated lines
  std::vector<std::size_t> positions;  // original indices of the other side
};

template <class Ops, class Convert>
std::size_t block_rank(const std::vector<std::vector<std::pair<std::size_t, const Scalar*>>>& lines,
                       const Block& block, const std::vector<std::uint32_t>& local_pos, const Ops& ops,
                       Convert convert, bool* ok) {
  using V = typename Ops::Value;
  std::vector<detail::SparseRow<V>> rows;
  rows.reserve(block.lines.size());
  for (std::size_t line : block.lines) {
    detail::SparseRow<V> row;
    row.reserve(lines[line].size());
    for (const auto& [pos, value] : lines[line]) {
      V v{};
      if (!convert(*value, v)) {
        *ok = false;
        return 0;
      }
      row.emplace_back(local_pos[pos], std::move(v));
    }
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    rows.push_back(std::move(row));
  }
  return detail::eliminate_rank(std::move(rows), block.positions.size(), ops);
}

}  // namespace

std::size_t rank(const SparseMatrix& m, const RankOptions& options) {
  if (m.nnz() == 0) return 0;
  // Orient so that the eliminated side is the smaller one.
  const bool by_rows = m.rows() <= m.cols();
  const std::size_t nlines = by_rows ? m.rows() : m.cols();
  const std::size_t npos = by_rows ? m.cols() : m.rows();
  std::vector<std::vector<std::pair<std::size_t, const Scalar*>>> lines(nlines);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t k = m.col_begin(c); k < m.col_end(c); ++k) {
      const std::size_t r = m.row_index(k);
      if (by_rows) {
        lines[r].emplace_back(c, &m.value(k));
      } else {
        lines[c].emplace_back(r, &m.value(k));
      }
    }
  }

  DisjointSets sets(npos);
  for (const auto& line : lines) {
    for (std::size_t i = 1; i < line.size(); ++i) sets.unite(line[0].first, line[i].first);
  }
  std::vector<std::size_t> block_of_root(npos, SIZE_MAX);
  std::vector<Block> blocks;
  std::vector<std::uint32_t> local_pos(npos, 0);
  for (std::size_t line = 0; line < nlines; ++line) {
    if (lines[line].empty()) continue;
    const std::size_t root = sets.find(lines[line][0].first);
    if (block_of_root[root] == SIZE_MAX) {
      block_of_root[root] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[root]].lines.push_back(line);
  }
  for (std::size_t pos = 0; pos < npos; ++pos) {
    const std::size_t b = block_of_root[sets.find(pos)];
    if (b == SIZE_MAX) continue;
    local_pos[pos] = static_cast<std::uint32_t>(blocks[b].positions.size());
    blocks[b].positions.push_back(pos);
  }

  std::size_t total = 0;
  if (m.field().is_prime()) {
    const detail::PrimeOps ops{m.field().characteristic()};
    auto convert = [](const Scalar& s, std::uint64_t& out) {
      out = s.residue_value();
      return true;
    };
    for (const auto& block : blocks) {
      bool ok = true;
      total += block_rank(lines, block, local_pos, ops, convert, &ok);
    }
    return total;
  }

  const detail::PrimeOps mod_ops{kPrepassPrime};
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  auto reduce = [&](const Scalar& s, std::uint64_t& out) {
    const mpq_class& q = s.rational_value();
    const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), kPrepassPrime);
    const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrepassPrime);
    if (den == 0) return false;
    out = modp::mul(num, modp::inv(den, kPrepassPrime), kPrepassPrime);
    return true;
  };
  const detail::RationalOps q_ops;
  auto exact = [](const Scalar& s, mpq_class& out) {
    out = s.rational_value();
    return true;
  };
  for (const auto& block : blocks) {
    const std::size_t bound = std::min(block.lines.size(), block.positions.size());
    if (options.modular_prepass) {
      bool ok = true;
      const std::size_t r = block_rank(lines, block, local_pos, mod_ops, reduce, &ok);
      if (ok && r == bound) {
        total += r;
        continue;
      }
    }
    bool ok = true;
    total += block_rank(lines, block, local_pos, q_ops, exact, &ok);
  }
  return total;
}

void write_coordinate(std::ostream& os, const SparseMatrix& m) {
  os << m.rows() << ' ' << m.cols() << ' ' << m.nnz() << '\n';
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t k = m.col_begin(c); k < m.col_end(c); ++k) {
      os << m.row_index(k) << ' ' << c << ' ' << m.value(k).to_string() << '\n';
    }
  }
}

SparseMatrix read_coordinate(std::istream& is, const FieldSpec& field) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t nnz = 0;
  if (!(is >> rows >> cols >> nnz)) throw ParseError("coordinate header 'rows cols nnz' expected");
  std::vector<Triplet> t;
  t.reserve(nnz);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0;
    std::size_t c = 0;
    std::string value;
    if (!(is >> r >> c >> value)) throw ParseError("coordinate entry " + std::to_string(k + 1) + " truncated");
    if (r >= rows || c >= cols) {
      throw ParseError("coordinate entry " + std::to_string(k + 1) + " outside " + shape(rows, cols));
    }
    t.push_back({r, c, Scalar::parse(field, value)});
  }
  return SparseMatrix(field, rows, cols, std::move(t));
}

ChainComplexWindow::ChainComplexWindow(int top_degree, std::vector<std::size_t> dims, std::vector<SparseMatrix> maps,
                                       bool check_composition)
    : top_(top_degree), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (dims_.empty()) throw ValidationError("chain complex window needs at least one degree");
  if (maps_.size() + 1 != dims_.size()) throw ValidationError("window needs one map per adjacent pair of degrees");
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    if (maps_[k].cols() != dims_[k] || maps_[k].rows() != dims_[k + 1]) {
      throw ValidationError("map out of degree " + std::to_string(top_ - static_cast<int>(k)) + " has shape " +
                            shape(maps_[k].rows(), maps_[k].cols()) + ", expected " + shape(dims_[k + 1], dims_[k]));
    }
  }
  if (check_composition && !composition_is_zero()) {
    throw ValidationError("adjacent differentials do not compose to zero");
  }
}

std::size_t ChainComplexWindow::dim(int degree) const {
  if (degree > top_ || degree < bottom_degree()) throw UsageError("degree outside window");
  return dims_[static_cast<std::size_t>(top_ - degree)];
}

const SparseMatrix& ChainComplexWindow::out_map(int degree) const {
  if (degree > top_ || degree <= bottom_degree()) throw UsageError("no outgoing map at degree " + std::to_string(degree));
  return maps_[static_cast<std::size_t>(top_ - degree)];
}

bool ChainComplexWindow::composition_is_zero() const {
  for (std::size_t k = 0; k + 1 < maps_.size(); ++k) {
    if (!multiply(maps_[k + 1], maps_[k]).is_zero()) return false;
  }
  return true;
}

std::size_t ChainComplexWindow::homology_dim(int degree, const RankOptions& options) const {
  if (!is_interior(degree)) {
    throw UsageError("homology at degree " + std::to_string(degree) + " needs maps on both sides");
  }
  const std::size_t out_rank = rank(out_map(degree), options);
  const std::size_t in_rank = rank(out_map(degree + 1), options);
  return dim(degree) - out_rank - in_rank;
}

std::map<int, std::size_t> ChainComplexWindow::homology_dims(const RankOptions& options) const {
  std::vector<std::size_t> ranks;
  ranks.reserve(maps_.size());
  for (const auto& m : maps_) ranks.push_back(rank(m, options));
  std::map<int, std::size_t> out;
  for (std::size_t k = 1; k + 1 < dims_.size(); ++k) {
    out[top_ - static_cast<int>(k)] = dims_[k] - ranks[k] - ranks[k - 1];
  }
  return out;
}

}  // namespace tatehh
