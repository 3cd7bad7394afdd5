#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tatehh/algebra.hpp"
#include "tatehh/hochschild.hpp"

namespace tatehh {

enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2, exit_resource = 3 };

struct ParsedSpec {
  QciSpec spec;
  /// Every off-diagonal q_ij is not a root of unity (never true over a prime field).
  bool q_generic = false;
};

/// {"field": {"type":"rational"} | {"type":"prime","p":N}, "c": N,
///  "exponents": [...], "q": c x c array of scalar strings}.
/// ParseError for malformed documents or scalars, ValidationError for
/// violated algebra invariants.
ParsedSpec parse_spec(const std::string& text);
std::string spec_to_json(const QciSpec& spec);

enum class Suite { ci, exterior, codim2, duality, exactness };
std::string to_string(Suite s);
Suite parse_suite(const std::string& text);
std::vector<Suite> all_suites();

struct Check {
  enum class Status { pass, mismatch, resource };
  std::string check;
  std::string lhs;
  std::string rhs;
  Status status = Status::pass;
  bool pass() const { return status == Status::pass; }
};

struct VerifyReport {
  std::vector<Check> checks;
  int exit_code() const;
  void append(const VerifyReport& other);
};

struct VerifyOptions {
  int max_degree = 3;
  std::size_t bar_budget = kDefaultBarBudget;
  std::uint64_t seed = 20240607;
};

VerifyReport run_verify(Suite suite, const VerifyOptions& options = {});
/// JSON array of {check, lhs, rhs, pass}.
std::string report_to_json(const VerifyReport& report);

/// Deterministic random quantum complete intersections: c <= max_c,
/// 2 <= a_i <= max_a, dim A <= max_dim; rational fields get q_ij drawn from
/// non-roots of unity, prime fields get q_ij = +-1.
std::vector<QciSpec> random_specs(std::uint64_t seed, std::size_t count, std::size_t max_dim, int max_c = 3,
                                  int max_a = 4);

}  // namespace tatehh
