#include "tatehh/tate_engine.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "tatehh/closed_forms.hpp"
#include "tatehh/codim2_complex.hpp"
#include "tatehh/errors.hpp"
#include "tatehh/near_zero.hpp"

namespace tatehh {

// ------------------------------------------------------------ enums

std::string to_string(MethodPolicy p) {
  switch (p) {
    case MethodPolicy::automatic:
      return "auto";
    case MethodPolicy::bar:
      return "bar";
    case MethodPolicy::complex:
      return "complex";
    case MethodPolicy::formula:
      return "formula";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::oracle:
      return "oracle";
    case Method::zeromaps:
      return "zeromaps";
    case Method::delta:
      return "delta";
    case Method::formula:
      return "formula";
    case Method::duality:
      return "duality";
    case Method::unavailable:
      return "unavailable";
  }
  return "?";
}

std::string to_string(Direction d) { return d == Direction::homology ? "homology" : "cohomology"; }

MethodPolicy parse_policy(const std::string& text) {
  for (auto p : {MethodPolicy::automatic, MethodPolicy::bar, MethodPolicy::complex, MethodPolicy::formula}) {
    if (to_string(p) == text) return p;
  }
  throw ParseError("unknown method policy '" + text + "'");
}

Method parse_method(const std::string& text) {
  for (auto m : {Method::oracle, Method::zeromaps, Method::delta, Method::formula, Method::duality, Method::unavailable}) {
    if (to_string(m) == text) return m;
  }
  throw ParseError("unknown method '" + text + "'");
}

Direction parse_direction(const std::string& text) {
  if (text == "homology") return Direction::homology;
  if (text == "cohomology") return Direction::cohomology;
  throw ParseError("unknown variant '" + text + "'");
}

std::string Coefficient::to_string() const { return nu_power == 0 ? "regular" : "nu:" + std::to_string(nu_power); }

Coefficient Coefficient::parse(const std::string& text) {
  if (text == "regular") return {};
  if (text.rfind("nu:", 0) == 0) {
    try {
      std::size_t used = 0;
      const long long k = std::stoll(text.substr(3), &used);
      if (used == text.size() - 3) return {k};
    } catch (const std::exception&) {
    }
  }
  throw ParseError("coefficient must be 'regular' or 'nu:K', got '" + text + "'");
}

const TableEntry& DimensionTable::at(int degree) const {
  for (const auto& e : entries) {
    if (e.degree == degree) return e;
  }
  throw UsageError("degree " + std::to_string(degree) + " not in table");
}

FormulaFamily formula_family(const QciSpec& spec) {
  const std::size_t c = spec.generators();
  if (c == 2 && spec.field.is_rational() && assert_not_root_of_unity(spec.q_at(0, 1), spec.field)) {
    return FormulaFamily::codim2_generic;
  }
  bool commutative = true;
  bool exterior = true;
  const Scalar minus_one = Scalar::from_int(spec.field, -1);
  for (std::size_t i = 0; i < c; ++i) {
    if (spec.exponents[i] != spec.exponents[0]) commutative = false;
    if (spec.exponents[i] != 2) exterior = false;
    for (std::size_t j = 0; j < c; ++j) {
      if (i == j) continue;
      if (!spec.q_at(i, j).is_one()) commutative = false;
      if (!(spec.q_at(i, j) == minus_one)) exterior = false;
    }
  }
  if (commutative) return FormulaFamily::commutative_ci;
  if (exterior) return FormulaFamily::exterior;
  return FormulaFamily::none;
}

// ------------------------------------------------------------ routing

namespace {

std::string descriptor(Direction d, int n, const std::string& coeff, Method m) {
  return to_string(d) + "/" + std::to_string(n) + "/" + coeff + "/" + to_string(m);
}

std::string nu_label(std::int64_t k) { return "nu:" + std::to_string(k); }

class Engine {
 public:
  explicit Engine(const TateRequest& req)
      : req_(req),
        algebra_(req.algebra),
        family_(formula_family(req.algebra)),
        delta_ok_(family_ == FormulaFamily::codim2_generic),
        nu_inverse_(nakayama(algebra_, -1)),
        hint_(std::max({std::abs(req.n_min), std::abs(req.n_max), 1})) {}

  TableEntry resolve(int n) {
    const std::int64_t k = req_.coefficient.nu_power;
    if (formula_allowed() && regular(k) && family_ != FormulaFamily::none) {
      return value_entry(n, formula_value(req_.variant, n), Method::formula,
                         descriptor(req_.variant, n, nu_label(k), Method::formula));
    }
    if (req_.variant == Direction::homology) {
      if (n >= 0) return direct_homology(n, k);
      return duality(n, direct_homology(-(n + 1), -k));
    }
    if (n >= 1) return positive_cohomology(n, k);
    if (n == 0) return cohomology_zero(k);
    return duality(n, direct_homology(-(n + 1), k - 1));
  }

  const std::vector<std::filesystem::path>& dumps() const { return dumps_; }

 private:
  bool formula_allowed() const {
    return req_.policy == MethodPolicy::automatic || req_.policy == MethodPolicy::formula;
  }
  bool bar_allowed() const { return req_.policy == MethodPolicy::automatic || req_.policy == MethodPolicy::bar; }
  bool complex_allowed() const {
    return req_.policy == MethodPolicy::automatic || req_.policy == MethodPolicy::complex;
  }
  bool zeromaps_allowed() const { return req_.policy != MethodPolicy::formula; }

  DiagonalTwist nu_pow(std::int64_t k) const { return nakayama(algebra_, k); }
  bool regular(std::int64_t k) const { return nu_pow(k).is_identity(); }
  bool is_nu_inverse(std::int64_t k) const { return nu_pow(k) == nu_inverse_; }

  std::uint64_t formula_value(Direction d, int n) const {
    const QciSpec& s = req_.algebra;
    const std::uint64_t p = s.field.is_prime() ? s.field.characteristic() : 0;
    switch (family_) {
      case FormulaFamily::commutative_ci:
        return ci_dim(static_cast<int>(s.generators()), s.exponents[0], p, fold_degree(n));
      case FormulaFamily::exterior:
        return exterior_dim(static_cast<int>(s.generators()), p, fold_degree(n));
      case FormulaFamily::codim2_generic:
        return d == Direction::homology ? codim2_homology_dim(s.exponents[0], s.exponents[1], p, n)
                                        : codim2_cohomology_dim(n);
      case FormulaFamily::none:
        break;
    }
    throw UsageError("no closed form for this algebra");
  }

  TableEntry value_entry(int n, std::uint64_t v, Method m, std::string source) const {
    return TableEntry{n, v, m, std::move(source)};
  }
  TableEntry unavailable(int n, std::string source) const { return TableEntry{n, std::nullopt, Method::unavailable, std::move(source)}; }

  TableEntry duality(int n, const TableEntry& src) const {
    if (!src.dimension) return unavailable(n, src.source);
    return TableEntry{n, src.dimension, Method::duality, src.source};
  }

  void require_delta_hypotheses() const {
    if (req_.policy == MethodPolicy::complex && algebra_.generators() == 2 && !delta_ok_) {
      codim2_params(req_.algebra);  // throws the specific HypothesisError
      throw HypothesisError("delta complex hypotheses fail");
    }
  }

  // Homology with coefficient nu^k at n >= 0 without duality.
  TableEntry direct_homology(int n, std::int64_t k) {
    const std::string coeff = nu_label(k);
    if (formula_allowed() && regular(k) && family_ != FormulaFamily::none) {
      return value_entry(n, formula_value(Direction::homology, n), Method::formula,
                         descriptor(Direction::homology, n, coeff, Method::formula));
    }
    if (n == 0) {
      if (!zeromaps_allowed()) return unavailable(n, descriptor(Direction::homology, 0, coeff, Method::formula));
      return value_entry(0, zeromaps(nu_pow(k)), Method::zeromaps,
                         descriptor(Direction::homology, 0, coeff, Method::zeromaps));
    }
    if (complex_allowed() && is_nu_inverse(k)) {
      if (delta_ok_) {
        return value_entry(n, delta(n), Method::delta, descriptor(Direction::homology, n, coeff, Method::delta));
      }
      require_delta_hypotheses();
    }
    if (bar_allowed()) return bar(Direction::homology, n, k);
    const Method wanted = req_.policy == MethodPolicy::formula ? Method::formula : Method::delta;
    return unavailable(n, descriptor(Direction::homology, n, coeff, wanted));
  }

  TableEntry positive_cohomology(int n, std::int64_t k) {
    if (complex_allowed() && is_nu_inverse(1 - k)) {
      if (delta_ok_) {
        return TableEntry{n, delta(n), Method::duality,
                          descriptor(Direction::homology, n, nu_label(1 - k), Method::delta)};
      }
      require_delta_hypotheses();
    }
    if (bar_allowed()) return bar(Direction::cohomology, n, k);
    const Method wanted = req_.policy == MethodPolicy::formula ? Method::formula : Method::delta;
    return unavailable(n, descriptor(Direction::homology, n, nu_label(1 - k), wanted));
  }

  // Degree 0 cohomology: the dual coefficient recognized as _psi A_1, then zeromaps.
  TableEntry cohomology_zero(std::int64_t k) {
    if (!zeromaps_allowed()) return unavailable(0, descriptor(Direction::cohomology, 0, nu_label(k), Method::formula));
    const Bimodule dual = dual_bimodule(twisted_bimodule(algebra_, nu_pow(k), DiagonalTwist::identity(algebra_.field(), algebra_.generators())));
    const auto psi = recognize_one_sided_twist(algebra_, dual);
    if (!psi) return unavailable(0, descriptor(Direction::homology, 0, "unrecognized", Method::zeromaps));
    return TableEntry{0, zeromaps(*psi), Method::duality, descriptor(Direction::homology, 0, twist_label(*psi, 1 - k), Method::zeromaps)};
  }

  std::string twist_label(const DiagonalTwist& psi, std::int64_t guess) const {
    if (nu_pow(guess) == psi) return nu_label(guess);
    for (std::int64_t k = -8; k <= 8; ++k) {
      if (nu_pow(k) == psi) return nu_label(k);
    }
    std::string out = "twist:";
    for (std::size_t w = 0; w < psi.generators(); ++w) out += (w ? ";" : "") + psi.alpha(w).to_string();
    return out;
  }

  std::uint64_t zeromaps(const DiagonalTwist& psi) {
    const std::string key = psi.to_string();
    auto it = zeromaps_cache_.find(key);
    if (it == zeromaps_cache_.end()) it = zeromaps_cache_.emplace(key, tate_hh0(algebra_, psi)).first;
    return it->second;
  }

  std::uint64_t delta(int n) {
    if (static_cast<int>(delta_cache_.size()) < n) {
      const int top = std::max(n, hint_) + 1;
      const auto dims = twisted_homology_dims(req_.algebra, top);
      delta_cache_.assign(dims.begin(), dims.end());
    }
    return delta_cache_[static_cast<std::size_t>(n - 1)];
  }

  TableEntry bar(Direction d, int n, std::int64_t k) {
    const std::string coeff = nu_label(k);
    const std::string desc = descriptor(d, n, coeff, Method::oracle);
    const auto key = std::make_pair(d, k);
    auto& cached = bar_cache_[key];
    if (static_cast<int>(cached.size()) <= n) {
      const std::size_t dim = algebra_.dim();
      // largest top degree within the budget, at least n
      int top = -1;
      for (int m = std::max(n, hint_); m >= n; --m) {
        const auto space = bar_space_dim(dim, dim, m + 1);
        if (space && *space <= req_.bar_budget) {
          top = m;
          break;
        }
      }
      if (top < 0) return unavailable(n, desc);
      BarWindowRequest bar_req{algebra_,
                               twisted_bimodule(algebra_, nu_pow(k), DiagonalTwist::identity(algebra_.field(), algebra_.generators())),
                               top, d, req_.bar_budget, false, RankOptions{}, std::nullopt};
      if (req_.dump_dir) {
        bar_req.dump_dir = *req_.dump_dir / (to_string(d) + "_nu" + std::to_string(k));
        for (int m = (d == Direction::homology ? 1 : 0); m <= top + (d == Direction::homology ? 1 : 0); ++m) {
          dumps_.push_back(*bar_req.dump_dir / ((d == Direction::homology ? "homology_d" : "cohomology_d") + std::to_string(m) + ".txt"));
        }
      }
      try {
        const auto dims = d == Direction::homology ? hh_homology_dims(bar_req) : hh_cohomology_dims(bar_req);
        cached.assign(dims.begin(), dims.end());
      } catch (const ResourceError&) {
        return unavailable(n, desc);
      }
    }
    return value_entry(n, cached[static_cast<std::size_t>(n)], Method::oracle, desc);
  }

  const TateRequest& req_;
  QciAlgebra algebra_;
  FormulaFamily family_;
  bool delta_ok_;
  DiagonalTwist nu_inverse_;
  int hint_;
  std::map<std::pair<Direction, std::int64_t>, std::vector<std::uint64_t>> bar_cache_;
  std::map<std::string, std::uint64_t> zeromaps_cache_;
  std::vector<std::uint64_t> delta_cache_;
  std::vector<std::filesystem::path> dumps_;
};

DimensionTable run(const TateRequest& req, std::vector<std::filesystem::path>* dumps) {
  if (req.n_min > req.n_max) throw UsageError("degree window is empty: n_min > n_max");
  req.algebra.validate();
  Engine engine(req);
  DimensionTable table;
  for (int n = req.n_min; n <= req.n_max; ++n) table.entries.push_back(engine.resolve(n));
  if (dumps) *dumps = engine.dumps();
  return table;
}

}  // namespace

DimensionTable tate_dims(const TateRequest& req) { return run(req, nullptr); }

bool CrossValidation::all_agree() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const Degree& d) { return d.agree; });
}

CrossValidation cross_validate(const TateRequest& req) {
  CrossValidation out;
  for (int n = req.n_min; n <= req.n_max; ++n) out.degrees.push_back({n, {}, true});
  for (auto policy : {MethodPolicy::formula, MethodPolicy::bar, MethodPolicy::complex}) {
    TateRequest r = req;
    r.policy = policy;
    DimensionTable table;
    std::vector<std::filesystem::path> dumps;
    try {
      table = run(r, &dumps);
    } catch (const HypothesisError& e) {
      for (int n = req.n_min; n <= req.n_max; ++n) {
        table.entries.push_back({n, std::nullopt, Method::unavailable, std::string("hypothesis: ") + e.what()});
      }
    }
    out.dumps.insert(out.dumps.end(), dumps.begin(), dumps.end());
    for (std::size_t i = 0; i < table.entries.size(); ++i) out.degrees[i].attempts.push_back({policy, table.entries[i]});
  }
  for (auto& d : out.degrees) {
    std::optional<std::uint64_t> seen;
    for (const auto& a : d.attempts) {
      if (!a.entry.dimension) continue;
      if (seen && *seen != *a.entry.dimension) d.agree = false;
      seen = a.entry.dimension;
    }
  }
  return out;
}

// ------------------------------------------------------------ serialization

void write_csv(std::ostream& os, const DimensionTable& table) {
  os << "degree,dimension,method,source\n";
  for (const auto& e : table.entries) {
    if (e.source.find_first_of(",\n\"") != std::string::npos) throw UsageError("source field cannot hold ',', '\"' or newlines");
    os << e.degree << ',' << (e.dimension ? std::to_string(*e.dimension) : "NA") << ',' << to_string(e.method) << ','
       << e.source << '\n';
  }
}

DimensionTable read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "degree,dimension,method,source") {
    throw ParseError("line 1: expected header degree,dimension,method,source");
  }
  DimensionTable table;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) fields.push_back(f);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (fields.size() != 4) throw ParseError("line " + std::to_string(lineno) + ": expected 4 fields");
    TableEntry e;
    try {
      std::size_t used = 0;
      e.degree = std::stoi(fields[0], &used);
      if (used != fields[0].size()) throw std::invalid_argument("degree");
      if (fields[1] != "NA") {
        e.dimension = std::stoull(fields[1], &used);
        if (used != fields[1].size()) throw std::invalid_argument("dimension");
      }
    } catch (const std::logic_error&) {
      throw ParseError("line " + std::to_string(lineno) + ": malformed number");
    }
    e.method = parse_method(fields[2]);
    e.source = fields[3];
    table.entries.push_back(std::move(e));
  }
  return table;
}

std::string to_json(const DimensionTable& table) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto& e : table.entries) {
    nlohmann::ordered_json row;
    row["degree"] = e.degree;
    row["dimension"] = e.dimension ? nlohmann::ordered_json(*e.dimension) : nlohmann::ordered_json(nullptr);
    row["method"] = to_string(e.method);
    row["source"] = e.source;
    doc.push_back(std::move(row));
  }
  return doc.dump(2);
}

DimensionTable table_from_json(const std::string& text) {
  DimensionTable table;
  try {
    const auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw ParseError("dimension table JSON must be an array");
    for (const auto& row : doc) {
      TableEntry e;
      e.degree = row.at("degree").get<int>();
      if (!row.at("dimension").is_null()) e.dimension = row.at("dimension").get<std::uint64_t>();
      e.method = parse_method(row.at("method").get<std::string>());
      e.source = row.at("source").get<std::string>();
      table.entries.push_back(std::move(e));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("dimension table JSON: ") + ex.what());
  }
  return table;
}

}  // namespace tatehh
