// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic only.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tatehh/algebra.hpp"
#include "tatehh/cli_reports.hpp"
#include "tatehh/closed_forms.hpp"
#include "tatehh/codim2_complex.hpp"
#include "tatehh/errors.hpp"
#include "tatehh/hochschild.hpp"
#include "tatehh/near_zero.hpp"
#include "tatehh/tate_engine.hpp"

using namespace tatehh;

namespace {

const FieldSpec Q = FieldSpec::rational();
Scalar rat(std::int64_t n, std::int64_t d = 1) { return Scalar::from_fraction(Q, n, d); }

// Collects the first few mismatches of a criterion.
struct Outcome {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  template <class T>
  void equal(const std::string& what, const T& lhs, const T& rhs) {
    ++checks;
    if (!(lhs == rhs)) failures.push_back(what);
  }
  void expect(const std::string& what, bool ok) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
};

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::uint64_t> values(const DimensionTable& t, bool* complete = nullptr) {
  std::vector<std::uint64_t> out;
  if (complete) *complete = true;
  for (const auto& e : t.entries) {
    if (!e.dimension && complete) *complete = false;
    out.push_back(e.dimension.value_or(0));
  }
  return out;
}

TateRequest request(const QciSpec& spec, int lo, int hi, Direction dir, MethodPolicy policy, std::int64_t k = 0) {
  TateRequest r;
  r.algebra = spec;
  r.n_min = lo;
  r.n_max = hi;
  r.variant = dir;
  r.coefficient = {k};
  r.policy = policy;
  return r;
}

std::string name(const QciSpec& s) {
  std::ostringstream os;
  os << s.field.to_string() << " a=(";
  for (std::size_t i = 0; i < s.exponents.size(); ++i) os << (i ? "," : "") << s.exponents[i];
  os << ")";
  if (s.generators() == 2) os << " q=" << s.q_at(0, 1);
  return os.str();
}

DiagonalTwist identity_of(const QciAlgebra& a) { return DiagonalTwist::identity(a.field(), a.generators()); }

std::vector<std::size_t> bar_dims(const QciAlgebra& a, const Bimodule& b, int n_max, Direction dir) {
  BarWindowRequest r{a, b, n_max, dir, kDefaultBarBudget, true, {}, std::nullopt};
  return dir == Direction::homology ? hh_homology_dims(r) : hh_cohomology_dims(r);
}

// dim Z(A) minus the rank of y -> sum_i c_i x^i y x^{a-1-i}: the maps A -> A
// that factor through a projective bimodule.
std::size_t stable_center_dim(const QciAlgebra& a) {
  const std::size_t n = a.dim();
  const auto s = build_s(a);
  std::vector<Triplet> trace, comm;
  for (std::size_t y = 0; y < n; ++y) {
    auto acc = a.zero();
    for (std::size_t l = 0; l < n; ++l)
      for (std::size_t r = 0; r < n; ++r)
        if (!s.coefficient(l, r).is_zero())
          acc += s.coefficient(l, r) * multiply(multiply(a.basis(l), a.basis(y)), a.basis(r));
    for (std::size_t i = 0; i < n; ++i)
      if (!acc.coefficient(i).is_zero()) trace.push_back({i, y, acc.coefficient(i)});
    for (std::size_t w = 0; w < a.generators(); ++w) {
      const auto c = multiply(a.basis(y), a.generator(w)) - multiply(a.generator(w), a.basis(y));
      for (std::size_t i = 0; i < n; ++i)
        if (!c.coefficient(i).is_zero()) comm.push_back({i + n * w, y, c.coefficient(i)});
    }
  }
  const std::size_t center = n - rank(SparseMatrix(a.field(), n * a.generators(), n, comm));
  return center - rank(SparseMatrix(a.field(), n, n, trace));
}

// Criterion 1
Outcome codim2_cohomology() {
  Outcome o;
  std::vector<std::uint64_t> want;
  for (int n = -5; n <= 5; ++n) want.push_back(n == 1 ? 2 : (n == 0 || n == 2) ? 1 : 0);
  for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 2}})
    for (const auto& q : {rat(2), rat(3), rat(1, 2)}) {
      const auto spec = QciSpec::codim2(Q, a, b, q);
      for (auto policy : {MethodPolicy::automatic, MethodPolicy::bar}) {
        bool complete = false;
        const auto got = values(tate_dims(request(spec, -5, 5, Direction::cohomology, policy)), &complete);
        o.expect(name(spec) + " " + to_string(policy) + " complete", complete);
        o.equal(name(spec) + " " + to_string(policy) + ": " + join(got), got, want);
      }
    }
  return o;
}

// Criterion 2
Outcome codim2_homology() {
  Outcome o;
  for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 2}})
    for (const auto& q : {rat(2), rat(3), rat(1, 2)}) {
      const auto spec = QciSpec::codim2(Q, a, b, q);
      const std::vector<std::uint64_t> want(9, static_cast<std::uint64_t>(a + b - 2));
      for (auto policy : {MethodPolicy::automatic, MethodPolicy::bar}) {
        bool complete = false;
        const auto got = values(tate_dims(request(spec, -4, 4, Direction::homology, policy)), &complete);
        o.expect(name(spec) + " " + to_string(policy) + " complete", complete);
        o.equal(name(spec) + " " + to_string(policy) + ": " + join(got), got, want);
      }
    }
  // positive characteristic rows exist only as closed forms
  for (int n = -4; n <= 4; ++n) {
    const bool middle = n == 0 || n == -1;
    o.equal("p | a,b row", codim2_homology_dim(2, 4, 2, n), std::uint64_t{middle ? 5u : 6u});
    o.equal("p | a row", codim2_homology_dim(3, 2, 3, n), std::uint64_t{4u});
    o.equal("p | b row", codim2_homology_dim(2, 3, 3, n), std::uint64_t{4u});
    o.equal("p divides neither", codim2_homology_dim(2, 3, 5, n), std::uint64_t{3u});
  }
  const auto f5 = FieldSpec::prime(5);
  const auto spec = QciSpec::codim2(f5, 2, 2, Scalar::from_int(f5, 2));
  const auto t = tate_dims(request(spec, -4, 4, Direction::homology, MethodPolicy::formula));
  bool none = true;
  for (const auto& e : t.entries) none = none && !e.dimension && e.method == Method::unavailable;
  o.expect("formula policy over GF(5) is unavailable", none);
  bool raised = false;
  try {
    tate_dims(request(spec, 1, 2, Direction::homology, MethodPolicy::complex, -1));
  } catch (const HypothesisError&) {
    raised = true;
  }
  o.expect("complex policy over GF(5) raises a hypothesis error", raised);
  return o;
}

// Criterion 3
Outcome vanishing() {
  Outcome o;
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    const auto spec = QciSpec::codim2(Q, a, b, rat(2));
    const auto h = twisted_homology_dims(spec, 9);
    o.equal(name(spec) + " homology n=1..8", h, std::vector<std::size_t>(8, 0));
    const auto ks = kernel_dims(spec, 8);
    for (int n = 1; n <= 8; ++n) {
      const std::size_t ab = static_cast<std::size_t>(a * b), t = static_cast<std::size_t>(n / 2);
      o.equal(name(spec) + " ker delta_" + std::to_string(n), ks[n - 1], n % 2 ? ab * t + ab + 1 : ab * t + ab - 1);
    }
  }
  return o;
}

// Criterion 4
Outcome exterior() {
  Outcome o;
  for (const auto& f : {FieldSpec::prime(2), FieldSpec::prime(3), Q}) {
    const std::uint64_t p = f.characteristic();
    for (int c = 1; c <= 3; ++c) {
      const auto spec = QciSpec::exterior(f, static_cast<std::size_t>(c));
      const QciAlgebra a(spec);
      const std::string tag = name(spec);
      o.equal(tag + " zeromaps homology", std::uint64_t{tate_hh0(a, identity_of(a))}, exterior_dim(c, p, 0));
      o.equal(tag + " zeromaps cohomology", std::uint64_t{tate_hh0(a, nakayama(a, 1))}, exterior_dim(c, p, 0));
      const auto hom = bar_dims(a, regular_bimodule(a), 3, Direction::homology);
      const auto coh = bar_dims(a, regular_bimodule(a), 3, Direction::cohomology);
      for (int n = 1; n <= 3; ++n) {
        o.equal(tag + " bar HH_" + std::to_string(n), std::uint64_t{hom[n]}, exterior_dim(c, p, n));
        o.equal(tag + " bar HH^" + std::to_string(n), std::uint64_t{coh[n]}, exterior_dim(c, p, n));
      }
      for (auto dir : {Direction::homology, Direction::cohomology}) {
        bool complete = false;
        const auto t = values(tate_dims(request(spec, -4, 3, dir, MethodPolicy::bar)), &complete);
        o.expect(tag + " " + to_string(dir) + " complete", complete);
        for (int n = 0; n <= 3; ++n) {
          o.equal(tag + " " + to_string(dir) + " palindrome at " + std::to_string(n), t[n + 4], t[3 - n]);
          o.equal(tag + " " + to_string(dir) + " table at " + std::to_string(n), t[n + 4], exterior_dim(c, p, n));
        }
      }
    }
  }
  return o;
}

// Criterion 5
Outcome commutative_ci() {
  Outcome o;
  const std::vector<std::pair<FieldSpec, std::vector<std::uint64_t>>> cases = {
      {Q, {3, 4, 5, 6}}, {FieldSpec::prime(2), {4, 8, 12, 16}}};
  for (const auto& [f, want] : cases) {
    const auto spec = QciSpec::commutative(f, {2, 2});
    const auto t = tate_dims(request(spec, 0, 3, Direction::homology, MethodPolicy::bar));
    bool complete = false;
    const auto got = values(t, &complete);
    o.expect(name(spec) + " complete", complete);
    o.equal(name(spec) + ": " + join(got), got, want);
    for (int n = 0; n <= 3; ++n) o.equal(name(spec) + " ci_dim", got[n], ci_dim(2, 2, f.characteristic(), n));
    for (int n = 1; n <= 3; ++n) o.equal(name(spec) + " method", t.at(n).method, Method::oracle);
    o.equal(name(spec) + " method", t.at(0).method, Method::zeromaps);
  }
  return o;
}

// Criterion 6
Outcome lower_bounds() {
  Outcome o;
  const auto specs = random_specs(20240607, 20, 64);
  std::size_t prime = 0;
  for (const auto& spec : specs) {
    const QciAlgebra a(spec);
    prime += spec.field.is_prime();
    o.expect(name(spec) + " tate_hh0 >= lower bound",
             tate_hh0(a, identity_of(a)) >= lower_bound(spec.exponents, spec.field.characteristic(), 0));
  }
  o.expect("family mixes rational and prime fields", prime > 0 && prime < specs.size());
  return o;
}

std::vector<QciSpec> duality_family() {
  const auto f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3), f5 = FieldSpec::prime(5);
  std::vector<QciSpec> out = {
      QciSpec::commutative(Q, {2}),
      QciSpec::commutative(f2, {3}),
      QciSpec::commutative(f3, {3}),
      QciSpec::commutative(Q, {2, 2}),
      QciSpec::commutative(f2, {2, 2}),
      QciSpec::exterior(Q, 2),
      QciSpec::exterior(f3, 2),
      QciSpec::codim2(Q, 2, 2, rat(2)),
      QciSpec::codim2(Q, 3, 2, rat(1, 2)),
      QciSpec::codim2(Q, 2, 3, rat(-3)),
      QciSpec::codim2(f5, 2, 3, Scalar::from_int(f5, 2)),
      QciSpec::codim2(f5, 2, 2, Scalar::from_int(f5, 4)),
  };
  for (auto& s : random_specs(20240607, 8, 6)) out.push_back(s);
  return out;
}

// Criterion 7
Outcome duality() {
  Outcome o;
  // (a)
  for (const auto& spec : duality_family()) {
    const QciAlgebra a(spec);
    for (std::int64_t k : {0, 1, -1}) {
      const auto b = twisted_bimodule(a, nakayama(a, k), identity_of(a));
      o.equal(name(spec) + " k=" + std::to_string(k) + " HH^n(B) vs HH_n(DB)",
              bar_dims(a, b, 3, Direction::cohomology), bar_dims(a, dual_bimodule(b), 3, Direction::homology));
    }
  }
  // (b): left side from the bar complex and the degree-0 window, right side
  // from the closed forms at the negative degree
  std::vector<QciSpec> families;
  for (const auto& f : {Q, FieldSpec::prime(2), FieldSpec::prime(3)}) {
    families.push_back(QciSpec::commutative(f, {2, 2}));
    families.push_back(QciSpec::commutative(f, {3}));
    families.push_back(QciSpec::exterior(f, 2));
    families.push_back(QciSpec::exterior(f, 3));
  }
  for (const auto& q : {rat(2), rat(3), rat(1, 2), rat(-2)})
    for (auto [a, b] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) families.push_back(QciSpec::codim2(Q, a, b, q));
  for (const auto& spec : families) {
    const QciAlgebra a(spec);
    const auto hom = bar_dims(a, regular_bimodule(a), 2, Direction::homology);
    const auto formula = tate_dims(request(spec, -3, -1, Direction::homology, MethodPolicy::formula));
    for (int n = 0; n <= 2; ++n) {
      const std::uint64_t lhs = n == 0 ? tate_hh0(a, identity_of(a)) : hom[n];
      const auto& rhs = formula.at(-(n + 1));
      o.expect(name(spec) + " palindrome rhs by formula", rhs.method == Method::formula && rhs.dimension.has_value());
      o.equal(name(spec) + " palindrome n=" + std::to_string(n), std::optional<std::uint64_t>(lhs), rhs.dimension);
    }
  }
  // (c)
  for (const auto& spec : duality_family()) {
    const QciAlgebra a(spec);
    const auto coh = bar_dims(a, regular_bimodule(a), 1, Direction::cohomology);
    const auto twisted = tate_dims(request(spec, -2, -1, Direction::cohomology, MethodPolicy::bar, 2));
    o.equal(name(spec) + " twist duality n=0", std::optional<std::uint64_t>(stable_center_dim(a)),
            twisted.at(-1).dimension);
    o.equal(name(spec) + " twist duality n=1", std::optional<std::uint64_t>(coh[1]), twisted.at(-2).dimension);
  }
  return o;
}

// Criterion 8
Outcome exactness() {
  Outcome o;
  std::vector<QciSpec> specs = {QciSpec::commutative(Q, {2}), QciSpec::exterior(Q, 2), QciSpec::exterior(Q, 4),
                                QciSpec::exterior(FieldSpec::prime(2), 3), QciSpec::commutative(FieldSpec::prime(3), {3, 3})};
  for (int a = 2; a <= 4; ++a)
    for (int b = 2; b <= 4; ++b)
      for (const auto& q : {rat(2), rat(-1, 3)}) specs.push_back(QciSpec::codim2(Q, a, b, q));
  for (auto& s : random_specs(20240607, 30, 16)) specs.push_back(s);
  for (const auto& spec : specs) {
    const QciAlgebra a(spec);
    const auto rep = exactness_report(a);
    o.expect(name(spec) + " annihilated", rep.annihilated);
    o.equal(name(spec) + " independent copies", rep.independent_rank, a.dim());
    o.equal(name(spec) + " expected count", rep.expected_rank, a.dim());
  }
  return o;
}

// Criterion 9
Outcome verify_all() {
  Outcome o;
#ifdef TATEHH_CLI_PATH
  const std::string cmd = std::string("\"") + TATEHH_CLI_PATH + "\" verify --suite all --out /dev/null >/dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  o.expect("tatehh verify --suite all exits 0 (status " + std::to_string(rc) + ")", rc == 0);
#else
  VerifyReport total;
  for (auto s : all_suites()) total.append(run_verify(s));
  o.expect("verify over all suites exits 0", total.exit_code() == exit_ok);
#endif
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "codim-2 cohomology table on [-5,5]", 60, codim2_cohomology},
      {2, "codim-2 homology table on [-4,4]", 0, codim2_homology},
      {3, "vanishing twisted homology and kernel dimensions", 30, vanishing},
      {4, "exterior algebras", 0, exterior},
      {5, "commutative complete intersection", 120, commutative_ci},
      {6, "lower bound on random algebras", 0, lower_bounds},
      {7, "duality", 0, duality},
      {8, "exactness of the degree-0 segment", 0, exactness},
      {9, "verify over all suites", 600, verify_all},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string error;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_seconds > 0 && secs >= c.limit_seconds;
    const bool ok = error.empty() && o.failures.empty() && !slow;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << o.checks
              << " checks, " << timing;
    if (c.limit_seconds > 0) std::cout << " of " << c.limit_seconds << "s";
    std::cout << ")\n";
    if (!error.empty()) std::cout << "  error: " << error << "\n";
    if (slow) std::cout << "  over the time limit\n";
    for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::cout << "  mismatch: " << o.failures[i] << "\n";
    std::cout.flush();
    failed += !ok;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
