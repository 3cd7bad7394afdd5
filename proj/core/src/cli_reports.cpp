#include "tatehh/cli_reports.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "json.hpp"

#include "tatehh/closed_forms.hpp"
#include "tatehh/codim2_complex.hpp"
#include "tatehh/errors.hpp"
#include "tatehh/near_zero.hpp"
#include "tatehh/tate_engine.hpp"

namespace tatehh {

// ------------------------------------------------------------ spec files

ParsedSpec parse_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("spec: ") + e.what());
  }
  auto field_error = [](const std::string& where, const std::string& what) { return ParseError("spec: " + where + ": " + what); };
  if (!doc.is_object()) throw field_error("document", "expected an object");
  for (const char* key : {"field", "c", "exponents", "q"}) {
    if (!doc.contains(key)) throw field_error(key, "missing");
  }

  FieldSpec field = FieldSpec::rational();
  const auto& f = doc["field"];
  if (!f.is_object() || !f.contains("type") || !f["type"].is_string()) throw field_error("field", "expected {\"type\": ...}");
  const std::string type = f["type"].get<std::string>();
  if (type == "prime") {
    if (!f.contains("p") || !f["p"].is_number_unsigned()) throw field_error("field.p", "expected a positive integer");
    try {
      field = FieldSpec::prime(f["p"].get<std::uint64_t>());
    } catch (const DomainError& e) {
      throw ValidationError(std::string("spec: field.p: ") + e.what());
    }
  } else if (type != "rational") {
    throw field_error("field.type", "expected \"rational\" or \"prime\", got \"" + type + "\"");
  }

  if (!doc["c"].is_number_integer() || doc["c"].get<long long>() < 1) throw field_error("c", "expected a positive integer");
  const auto c = static_cast<std::size_t>(doc["c"].get<long long>());
  const auto& ex = doc["exponents"];
  if (!ex.is_array() || ex.size() != c) throw field_error("exponents", "expected an array of " + std::to_string(c) + " integers");
  std::vector<int> exponents;
  for (std::size_t i = 0; i < c; ++i) {
    if (!ex[i].is_number_integer()) throw field_error("exponents[" + std::to_string(i) + "]", "expected an integer");
    exponents.push_back(ex[i].get<int>());
  }
  const auto& qd = doc["q"];
  if (!qd.is_array() || qd.size() != c) throw field_error("q", "expected a " + std::to_string(c) + "x" + std::to_string(c) + " array");
  std::vector<std::vector<Scalar>> q(c);
  for (std::size_t i = 0; i < c; ++i) {
    if (!qd[i].is_array() || qd[i].size() != c) throw field_error("q[" + std::to_string(i) + "]", "expected " + std::to_string(c) + " entries");
    for (std::size_t j = 0; j < c; ++j) {
      const std::string where = "q[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      if (!qd[i][j].is_string()) throw field_error(where, "scalars must be strings such as \"3/2\"");
      try {
        q[i].push_back(Scalar::parse(field, qd[i][j].get<std::string>()));
      } catch (const ParseError& e) {
        throw field_error(where, e.what());
      }
    }
  }
  ParsedSpec out{QciSpec::make(field, std::move(exponents), q), field.is_rational()};
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      if (!assert_not_root_of_unity(out.spec.q_at(i, j), field)) out.q_generic = false;
    }
  }
  return out;
}

std::string spec_to_json(const QciSpec& spec) {
  nlohmann::ordered_json doc;
  if (spec.field.is_prime()) {
    doc["field"] = {{"type", "prime"}, {"p", spec.field.characteristic()}};
  } else {
    doc["field"] = {{"type", "rational"}};
  }
  doc["c"] = spec.generators();
  doc["exponents"] = spec.exponents;
  nlohmann::ordered_json q = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < spec.generators(); ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < spec.generators(); ++j) row.push_back(spec.q_at(i, j).to_string());
    q.push_back(row);
  }
  doc["q"] = q;
  return doc.dump();
}

// ------------------------------------------------------------ suites

std::string to_string(Suite s) {
  switch (s) {
    case Suite::ci:
      return "ci";
    case Suite::exterior:
      return "exterior";
    case Suite::codim2:
      return "codim2";
    case Suite::duality:
      return "duality";
    case Suite::exactness:
      return "exactness";
  }
  return "?";
}

Suite parse_suite(const std::string& text) {
  for (auto s : all_suites()) {
    if (to_string(s) == text) return s;
  }
  throw ParseError("unknown suite '" + text + "'");
}

std::vector<Suite> all_suites() { return {Suite::ci, Suite::exterior, Suite::codim2, Suite::duality, Suite::exactness}; }

int VerifyReport::exit_code() const {
  bool resource = false;
  for (const auto& c : checks) {
    if (c.status == Check::Status::mismatch) return exit_mismatch;
    if (c.status == Check::Status::resource) resource = true;
  }
  return resource ? exit_resource : exit_ok;
}

void VerifyReport::append(const VerifyReport& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }

std::string report_to_json(const VerifyReport& report) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    doc.push_back({{"check", c.check}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass()}});
  }
  return doc.dump(2);
}

std::vector<QciSpec> random_specs(std::uint64_t seed, std::size_t count, std::size_t max_dim, int max_c, int max_a) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const std::vector<std::string> generic = {"2", "3", "1/2", "1/3", "-2", "2/3", "3/2", "-1/2", "5", "-3"};
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7};
  std::vector<QciSpec> out;
  while (out.size() < count) {
    const int c = uniform(1, max_c);
    std::vector<int> a;
    std::size_t dim = 1;
    for (int i = 0; i < c; ++i) {
      a.push_back(uniform(2, max_a));
      dim *= static_cast<std::size_t>(a.back());
    }
    if (dim > max_dim) continue;
    const bool rational = uniform(0, 1) == 0;
    const FieldSpec field = rational ? FieldSpec::rational() : FieldSpec::prime(primes[static_cast<std::size_t>(uniform(0, 3))]);
    std::vector<std::vector<Scalar>> q(c, std::vector<Scalar>(c, Scalar::one(field)));
    for (int i = 0; i < c; ++i) {
      for (int j = i + 1; j < c; ++j) {
        q[i][j] = rational ? Scalar::parse(field, generic[static_cast<std::size_t>(uniform(0, static_cast<int>(generic.size()) - 1))])
                           : Scalar::from_int(field, uniform(0, 1) ? 1 : -1);
        q[j][i] = q[i][j].inverse();
      }
    }
    out.push_back(QciSpec::make(field, a, q));
  }
  return out;
}

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::string name_of(const QciSpec& s) {
  std::ostringstream os;
  os << s.field.to_string() << " a=(";
  for (std::size_t i = 0; i < s.exponents.size(); ++i) os << (i ? "," : "") << s.exponents[i];
  os << ")";
  if (s.generators() > 1) {
    os << " q=(";
    bool first = true;
    for (std::size_t i = 0; i < s.generators(); ++i) {
      for (std::size_t j = i + 1; j < s.generators(); ++j) {
        os << (first ? "" : ",") << s.q_at(i, j);
        first = false;
      }
    }
    os << ")";
  }
  return os.str();
}

class Recorder {
 public:
  explicit Recorder(const VerifyOptions& o) : opt(o) {}

  void equal(const std::string& check, std::uint64_t lhs, std::uint64_t rhs) {
    report.checks.push_back({check, std::to_string(lhs), std::to_string(rhs), lhs == rhs ? Check::Status::pass : Check::Status::mismatch});
  }
  void equal(const std::string& check, const std::vector<std::uint64_t>& lhs, const std::vector<std::uint64_t>& rhs) {
    report.checks.push_back({check, join(lhs), join(rhs), lhs == rhs ? Check::Status::pass : Check::Status::mismatch});
  }
  void holds(const std::string& check, bool ok, const std::string& lhs, const std::string& rhs) {
    report.checks.push_back({check, lhs, rhs, ok ? Check::Status::pass : Check::Status::mismatch});
  }
  // Runs `body`; a ResourceError becomes a resource entry and the suite goes on.
  void guard(const std::string& check, const std::function<void()>& body) {
    try {
      body();
    } catch (const ResourceError& e) {
      report.checks.push_back({check, std::string("resource: ") + e.what(), "-", Check::Status::resource});
    }
  }

  std::vector<std::uint64_t> bar(const QciAlgebra& a, const Bimodule& b, Direction d, int n_max) const {
    BarWindowRequest req{a, b, n_max, d, opt.bar_budget, true, RankOptions{}, std::nullopt};
    const auto dims = d == Direction::homology ? hh_homology_dims(req) : hh_cohomology_dims(req);
    return {dims.begin(), dims.end()};
  }

  DimensionTable table(const QciSpec& s, Direction d, int lo, int hi, MethodPolicy p, std::int64_t k = 0) const {
    TateRequest r{s, lo, hi, d, Coefficient{k}, p, opt.bar_budget, std::nullopt};
    return tate_dims(r);
  }

  VerifyOptions opt;
  VerifyReport report;
};

std::vector<std::uint64_t> values(const DimensionTable& t) {
  std::vector<std::uint64_t> out;
  for (const auto& e : t.entries) {
    if (!e.dimension) throw ResourceError("degree " + std::to_string(e.degree) + " unavailable (" + e.source + ")");
    out.push_back(*e.dimension);
  }
  return out;
}

std::vector<std::uint64_t> palindrome_mirror(const DimensionTable& t) {
  // value at -(n+1) for each n in the table, read from the same table
  std::vector<std::uint64_t> out;
  for (const auto& e : t.entries) {
    const auto& m = t.at(-(e.degree + 1));
    if (!m.dimension) throw ResourceError("degree " + std::to_string(m.degree) + " unavailable");
    out.push_back(*m.dimension);
  }
  return out;
}

DiagonalTwist identity_of(const QciAlgebra& a) { return DiagonalTwist::identity(a.field(), a.generators()); }

std::uint64_t char_of(const QciSpec& s) { return s.field.is_prime() ? s.field.characteristic() : 0; }

void ci_suite(Recorder& r) {
  const int D = r.opt.max_degree;
  struct Case {
    FieldSpec field;
    int c;
    int a;
    int depth;
  };
  std::vector<Case> cases;
  for (const auto& f : {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    cases.push_back({f, 1, 2, D});
    cases.push_back({f, 1, 3, D});
    cases.push_back({f, 2, 2, D});
    cases.push_back({f, 2, 3, std::min(D, 2)});
  }
  for (const auto& cs : cases) {
    const QciSpec spec = QciSpec::commutative(cs.field, std::vector<int>(static_cast<std::size_t>(cs.c), cs.a));
    const QciAlgebra alg(spec);
    const std::uint64_t p = char_of(spec);
    const std::string tag = "ci/" + name_of(spec);
    r.guard(tag, [&] {
      const auto coh = r.bar(alg, regular_bimodule(alg), Direction::cohomology, cs.depth);
      const auto hom = r.bar(alg, regular_bimodule(alg), Direction::homology, cs.depth);
      std::vector<std::uint64_t> want;
      for (int n = 1; n <= cs.depth; ++n) want.push_back(ci_dim(cs.c, cs.a, p, n));
      r.equal(tag + ": bar HH^n, n=1.." + std::to_string(cs.depth) + " vs ci_dim", {coh.begin() + 1, coh.end()}, want);
      r.equal(tag + ": bar HH_n, n=1.." + std::to_string(cs.depth) + " vs ci_dim", {hom.begin() + 1, hom.end()}, want);
      if (cs.c == 1) {
        std::vector<std::uint64_t> holm;
        for (int n = 0; n <= cs.depth; ++n) holm.push_back(holm_dim(cs.a, p, n));
        r.equal(tag + ": bar HH^n, n=0.." + std::to_string(cs.depth) + " vs holm_dim", coh, holm);
      }
    });
    r.equal(tag + ": zeromaps degree 0 vs ci_dim", tate_hh0(alg, identity_of(alg)), ci_dim(cs.c, cs.a, p, 0));
    r.guard(tag + ": palindrome", [&] {
      for (auto d : {Direction::homology, Direction::cohomology}) {
        const auto t = r.table(spec, d, -cs.depth - 1, cs.depth, MethodPolicy::bar);
        r.equal(tag + ": " + to_string(d) + " table on [" + std::to_string(-cs.depth - 1) + "," + std::to_string(cs.depth) +
                    "] palindromic (bar policy)",
                values(t), palindrome_mirror(t));
        r.equal(tag + ": " + to_string(d) + " table bar policy vs formula policy", values(t),
                values(r.table(spec, d, -cs.depth - 1, cs.depth, MethodPolicy::formula)));
      }
    });
  }
}

void exterior_suite(Recorder& r) {
  const int D = r.opt.max_degree;
  for (const auto& f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::rational()}) {
    for (int c = 1; c <= 3; ++c) {
      const QciSpec spec = QciSpec::exterior(f, static_cast<std::size_t>(c));
      const QciAlgebra alg(spec);
      const std::uint64_t p = char_of(spec);
      const std::string tag = "exterior/" + name_of(spec);
      r.equal(tag + ": zeromaps degree 0 vs exterior_dim", tate_hh0(alg, identity_of(alg)), exterior_dim(c, p, 0));
      r.guard(tag + ": bar", [&] {
        std::vector<std::uint64_t> want;
        for (int n = 1; n <= D; ++n) want.push_back(exterior_dim(c, p, n));
        const auto coh = r.bar(alg, regular_bimodule(alg), Direction::cohomology, D);
        const auto hom = r.bar(alg, regular_bimodule(alg), Direction::homology, D);
        r.equal(tag + ": bar HH^n, n=1.." + std::to_string(D) + " vs exterior_dim", {coh.begin() + 1, coh.end()}, want);
        r.equal(tag + ": bar HH_n, n=1.." + std::to_string(D) + " vs exterior_dim", {hom.begin() + 1, hom.end()}, want);
      });
      r.guard(tag + ": palindrome", [&] {
        for (auto d : {Direction::homology, Direction::cohomology}) {
          const auto t = r.table(spec, d, -D - 1, D, MethodPolicy::bar);
          r.equal(tag + ": " + to_string(d) + " table on [" + std::to_string(-D - 1) + "," + std::to_string(D) +
                      "] palindromic (bar policy)",
                  values(t), palindrome_mirror(t));
          r.equal(tag + ": " + to_string(d) + " table bar policy vs formula policy", values(t),
                  values(r.table(spec, d, -D - 1, D, MethodPolicy::formula)));
        }
      });
    }
  }
}

void codim2_suite(Recorder& r) {
  const int D = r.opt.max_degree;
  const FieldSpec Q = FieldSpec::rational();
  const std::vector<std::string> qs = {"2", "3", "1/2"};
  const std::vector<std::pair<int, int>> shapes = {{2, 2}, {3, 2}, {2, 3}};
  for (const auto& [a, b] : shapes) {
    std::vector<std::uint64_t> first_coh;
    std::vector<std::uint64_t> first_hom;
    for (const auto& qtext : qs) {
      const QciSpec spec = QciSpec::codim2(Q, a, b, Scalar::parse(Q, qtext));
      const std::string tag = "codim2/" + name_of(spec);
      std::vector<std::uint64_t> coh_want;
      std::vector<std::uint64_t> hom_want;
      for (int n = -D - 1; n <= D; ++n) {
        coh_want.push_back(codim2_cohomology_dim(n));
        hom_want.push_back(codim2_homology_dim(a, b, 0, n));
      }
      const std::string window = " on [" + std::to_string(-D - 1) + "," + std::to_string(D) + "]";
      r.guard(tag + ": tables", [&] {
        const auto coh = values(r.table(spec, Direction::cohomology, -D - 1, D, MethodPolicy::bar));
        const auto hom = values(r.table(spec, Direction::homology, -D - 1, D, MethodPolicy::bar));
        r.equal(tag + ": cohomology table" + window + " (bar policy) vs closed form", coh, coh_want);
        r.equal(tag + ": homology table" + window + " (bar policy) vs closed form", hom, hom_want);
        const auto cx = values(r.table(spec, Direction::cohomology, -D - 1, 0, MethodPolicy::complex));
        r.equal(tag + ": cohomology degrees " + std::to_string(-D - 1) + "..0 (complex policy) vs closed form", cx,
                {coh_want.begin(), coh_want.begin() + D + 2});
        if (first_coh.empty()) {
          first_coh = coh;
          first_hom = hom;
        } else {
          r.equal(tag + ": cohomology table equals the q=" + qs.front() + " table", coh, first_coh);
          r.equal(tag + ": homology table equals the q=" + qs.front() + " table", hom, first_hom);
        }
      });
    }
  }

  // delta complex
  const int N = std::max(9, 2 * D + 2);
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    for (const auto& qtext : qs) {
      const QciSpec spec = QciSpec::codim2(Q, a, b, Scalar::parse(Q, qtext));
      const std::string tag = "codim2/" + name_of(spec) + "/delta";
      const DeltaComplex complex(spec, N);
      r.holds(tag + ": delta_n o delta_{n+1} = 0 for n < " + std::to_string(N), complex.composition_is_zero(), "zero", "zero");
      r.equal(tag + ": HH_n(A, nu^-1 A) for n=1.." + std::to_string(N - 1), [&] {
        const auto h = twisted_homology_dims(spec, N);
        return std::vector<std::uint64_t>(h.begin(), h.end());
      }(), std::vector<std::uint64_t>(static_cast<std::size_t>(N - 1), 0));
      std::vector<std::uint64_t> kw;
      const auto ab = static_cast<std::uint64_t>(a * b);
      for (int n = 1; n <= N; ++n) {
        const auto t = static_cast<std::uint64_t>(n / 2);
        kw.push_back(n % 2 == 0 ? ab * t + ab - 1 : ab * t + ab + 1);
      }
      const auto kd = kernel_dims(spec, N);
      r.equal(tag + ": dim ker delta_n, n=1.." + std::to_string(N) + " vs abt+ab-1 / abt+ab+1", {kd.begin(), kd.end()}, kw);
      // delta_1 is d_1 of the zeromaps window for nu^{-1} with the two blocks swapped
      const QciAlgebra alg(spec);
      const auto d1 = ZeromapsWindow::from_formulas(alg, nakayama(alg, -1)).d1();
      const std::size_t d = alg.dim();
      std::vector<Triplet> swapped;
      for (auto t : d1.triplets()) {
        t.col = (t.col + d) % (2 * d);
        swapped.push_back(t);
      }
      r.holds(tag + ": delta_1 equals d_1 for psi = nu^-1",
              complex.delta(1) == SparseMatrix(Q, d, 2 * d, std::move(swapped)), "delta_1", "d_1");
      if (qtext == "2") {
        r.guard(tag + ": bar", [&] {
          const int depth = std::min(D, 3);
          const auto bar = r.bar(alg, twisted_bimodule(alg, nakayama(alg, -1), identity_of(alg)), Direction::homology, depth);
          const auto h = twisted_homology_dims(spec, depth + 1);
          r.equal(tag + ": HH_n(A, nu^-1 A), n=1.." + std::to_string(depth) + " bar vs delta", {bar.begin() + 1, bar.end()},
                  {h.begin(), h.end()});
        });
      }
    }
  }
}

std::vector<QciSpec> small_family(std::uint64_t seed) {
  const FieldSpec Q = FieldSpec::rational();
  std::vector<QciSpec> out = {
      QciSpec::codim2(Q, 2, 2, Scalar::from_int(Q, 2)),
      QciSpec::codim2(Q, 3, 2, Scalar::parse(Q, "1/2")),
      QciSpec::exterior(Q, 2),
      QciSpec::commutative(FieldSpec::prime(2), {2, 2}),
      QciSpec::commutative(Q, {3}),
      QciSpec::codim2(FieldSpec::prime(5), 2, 3, Scalar::from_int(FieldSpec::prime(5), 2)),
  };
  for (auto& s : random_specs(seed, 6, 6)) out.push_back(std::move(s));
  return out;
}

void duality_suite(Recorder& r) {
  const int D = r.opt.max_degree;
  for (const auto& spec : small_family(r.opt.seed)) {
    const QciAlgebra alg(spec);
    const std::string tag = "duality/" + name_of(spec);
    const auto id = identity_of(alg);
    for (std::int64_t k : {0, 1, -1}) {
      const Bimodule b = twisted_bimodule(alg, nakayama(alg, k), id);
      const std::string coeff = k == 0 ? "A" : "nu^" + std::to_string(k) + " A";
      r.guard(tag + ": HH^n(A," + coeff + ") vs HH_n(A, D(" + coeff + "))", [&] {
        r.equal(tag + ": HH^n(A," + coeff + ") vs HH_n(A, D(" + coeff + ")), n=0.." + std::to_string(D),
                r.bar(alg, b, Direction::cohomology, D), r.bar(alg, dual_bimodule(b), Direction::homology, D));
      });
      const auto rec = recognize_one_sided_twist(alg, dual_bimodule(b));
      r.holds(tag + ": D(" + coeff + ") recognized as nu^" + std::to_string(1 - k) + " A",
              rec && *rec == nakayama(alg, 1 - k), rec ? rec->to_string() : "none", nakayama(alg, 1 - k).to_string());
    }
    // homology palindrome from independent sources
    if (formula_family(spec) != FormulaFamily::none) {
      r.guard(tag + ": homology palindrome", [&] {
        for (int n = 0; n <= 2; ++n) {
          const auto lhs = r.table(spec, Direction::homology, n, n, MethodPolicy::bar).at(n);
          const auto rhs = r.table(spec, Direction::homology, -(n + 1), -(n + 1), MethodPolicy::formula).at(-(n + 1));
          if (!lhs.dimension || !rhs.dimension) throw ResourceError("degree " + std::to_string(n) + " unavailable");
          r.equal(tag + ": dim HH_" + std::to_string(n) + " (" + to_string(lhs.method) + ") vs dim HH_" +
                      std::to_string(-(n + 1)) + " (" + to_string(rhs.method) + ")",
                  *lhs.dimension, *rhs.dimension);
        }
      });
    }
    // cohomology twist duality
    r.guard(tag + ": cohomology twist duality", [&] {
      for (int n = 0; n <= 1; ++n) {
        const auto lhs = r.table(spec, Direction::cohomology, n, n, MethodPolicy::bar).at(n);
        const auto rhs = r.table(spec, Direction::cohomology, -(n + 1), -(n + 1), MethodPolicy::bar, 2).at(-(n + 1));
        if (!lhs.dimension || !rhs.dimension) throw ResourceError("degree " + std::to_string(n) + " unavailable");
        r.equal(tag + ": dim HH^" + std::to_string(n) + "(A,A) [" + lhs.source + "] vs dim HH^" + std::to_string(-(n + 1)) +
                    "(A, nu^2 A) [" + rhs.source + "]",
                *lhs.dimension, *rhs.dimension);
      }
    });
    if (nakayama(alg, 2).is_identity()) {
      r.guard(tag + ": cohomology palindrome (nu^2 = 1)", [&] {
        const auto t = r.table(spec, Direction::cohomology, -D - 1, D, MethodPolicy::bar);
        r.equal(tag + ": cohomology table palindromic since nu^2 = 1", values(t), palindrome_mirror(t));
      });
    }
  }
}

void exactness_suite(Recorder& r) {
  const FieldSpec Q = FieldSpec::rational();
  std::vector<QciSpec> family = {
      QciSpec::commutative(Q, {2}),
      QciSpec::exterior(Q, 2),
      QciSpec::exterior(FieldSpec::prime(2), 3),
      QciSpec::exterior(Q, 4),
      QciSpec::codim2(Q, 3, 2, Scalar::from_int(Q, 2)),
      QciSpec::codim2(Q, 4, 4, Scalar::parse(Q, "1/3")),
      QciSpec::commutative(FieldSpec::prime(3), {3, 3}),
  };
  for (auto& s : random_specs(r.opt.seed + 1, 8, 16)) family.push_back(std::move(s));
  for (const auto& spec : family) {
    const QciAlgebra alg(spec);
    const std::string tag = "exactness/" + name_of(spec);
    const auto rep = exactness_report(alg);
    r.holds(tag + ": (1 (x) x_t - x_t (x) 1) s = 0", rep.annihilated, rep.annihilated ? "0" : "nonzero", "0");
    r.equal(tag + ": rank of the copies (x^j (x) 1) s", rep.independent_rank, rep.expected_rank);
    r.equal(tag + ": s has prod a_i terms", build_s(alg).nonzero_terms(), alg.dim());
    for (std::int64_t k : {0, 1, -1}) {
      const auto psi = nakayama(alg, k);
      const auto f = ZeromapsWindow::from_formulas(alg, psi);
      const auto e = ZeromapsWindow::from_enveloping(alg, psi);
      r.holds(tag + ": zeromaps nu^" + std::to_string(k) + " formulas equal the A^e action", f.d1() == e.d1() && f.d0() == e.d0(),
              "formula", "A^e");
      r.holds(tag + ": zeromaps nu^" + std::to_string(k) + " d0 o d1 = 0", multiply(f.d0(), f.d1()).is_zero(), "zero", "zero");
    }
  }
  // lower bound on a randomized family
  for (const auto& spec : random_specs(r.opt.seed + 2, 20, 36)) {
    const QciAlgebra alg(spec);
    const auto h = tate_hh0(alg, identity_of(alg));
    const auto lb = lower_bound(spec.exponents, char_of(spec), 0);
    r.holds("lower_bound/" + name_of(spec) + ": tate_hh0 >= lower bound", h >= lb, std::to_string(h), std::to_string(lb));
  }
}

}  // namespace

VerifyReport run_verify(Suite suite, const VerifyOptions& options) {
  if (options.max_degree < 1) throw UsageError("max degree must be at least 1");
  Recorder r(options);
  switch (suite) {
    case Suite::ci:
      ci_suite(r);
      break;
    case Suite::exterior:
      exterior_suite(r);
      break;
    case Suite::codim2:
      codim2_suite(r);
      break;
    case Suite::duality:
      duality_suite(r);
      break;
    case Suite::exactness:
      exactness_suite(r);
      break;
  }
  return r.report;
}

}  // namespace tatehh
