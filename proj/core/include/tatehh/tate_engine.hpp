#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tatehh/algebra.hpp"
#include "tatehh/hochschild.hpp"

namespace tatehh {

enum class MethodPolicy { automatic, bar, complex, formula };

/// How a table entry was obtained. `oracle` is the bar complex.
enum class Method { oracle, zeromaps, delta, formula, duality, unavailable };

std::string to_string(MethodPolicy p);
std::string to_string(Method m);
std::string to_string(Direction d);
MethodPolicy parse_policy(const std::string& text);
Method parse_method(const std::string& text);
Direction parse_direction(const std::string& text);

/// Coefficient bimodule _{nu^k}A_1; k = 0 is the regular bimodule.
struct Coefficient {
  std::int64_t nu_power = 0;
  std::string to_string() const;
  /// "regular" or "nu:K".
  static Coefficient parse(const std::string& text);
  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

struct TateRequest {
  QciSpec algebra;
  int n_min = 0;
  int n_max = 0;
  Direction variant = Direction::homology;
  Coefficient coefficient{};
  MethodPolicy policy = MethodPolicy::automatic;
  std::size_t bar_budget = kDefaultBarBudget;
  /// Directory for differential dumps of bar computations, if any.
  std::optional<std::filesystem::path> dump_dir;
};

struct TableEntry {
  int degree = 0;
  std::optional<std::uint64_t> dimension;  // nullopt when unavailable
  Method method = Method::unavailable;
  /// "variant/degree/coefficient/method" of the computation that produced
  /// the value; for duality entries this is the non-duality source, for
  /// unavailable entries the computation that could not be carried out.
  std::string source;
  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct DimensionTable {
  std::vector<TableEntry> entries;
  const TableEntry& at(int degree) const;
  friend bool operator==(const DimensionTable&, const DimensionTable&) = default;
};

/// One entry per degree in [n_min, n_max]. Budget exhaustion gives
/// unavailable entries; HypothesisError when the complex policy needs the
/// delta complex on a codim-2 algebra outside its hypotheses.
DimensionTable tate_dims(const TateRequest& req);

struct CrossValidation {
  struct Attempt {
    MethodPolicy policy;
    TableEntry entry;
  };
  struct Degree {
    int degree = 0;
    std::vector<Attempt> attempts;
    /// All available values coincide.
    bool agree = true;
  };
  std::vector<Degree> degrees;
  std::vector<std::filesystem::path> dumps;
  bool all_agree() const;
};

/// Runs the formula, bar and complex policies per degree and compares.
CrossValidation cross_validate(const TateRequest& req);

/// CSV with header degree,dimension,method,source; "NA" marks unavailable.
void write_csv(std::ostream& os, const DimensionTable& table);
DimensionTable read_csv(std::istream& is);
std::string to_json(const DimensionTable& table);
DimensionTable table_from_json(const std::string& text);

/// Which closed form covers (A, A), if any.
enum class FormulaFamily { none, commutative_ci, exterior, codim2_generic };
FormulaFamily formula_family(const QciSpec& spec);

}  // namespace tatehh
