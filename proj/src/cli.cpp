#include "blvoa/cli.hpp"

#include "blvoa/affine.hpp"
#include "blvoa/classify.hpp"
#include "blvoa/identities.hpp"
#include "blvoa/zero_weight.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace blvoa {

namespace {

using nlohmann::json;

struct RunConfig {
  std::size_t rank = 2;
  unsigned n = 1;
  std::string level;
  std::string weight;
  bool category_o = false;
  bool finite_dim = false;
  bool compare = false;
  bool json_out = false;
  std::size_t guard = EnvelopingAlgebra::kDefaultGuard;
  std::size_t oracle_ceiling = 2000;
  unsigned mmax = 0;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t default_guard() {
  if (const char* env = std::getenv("BLVOA_GUARD")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError("BLVOA_GUARD must be a positive integer");
  }
  return EnvelopingAlgebra::kDefaultGuard;
}

void validate(const RunConfig& c) {
  if (c.rank < 2) throw UsageError("--rank must be at least 2");
  if (c.n < 1) throw UsageError("--n must be at least 1");
  if (c.guard == 0 || c.oracle_ceiling == 0) throw UsageError("guards must be positive");
}

Rational level_of(const RunConfig& c) {
  if (c.level.empty()) return critical_level(c.rank, c.n);
  try {
    return parse_rational(c.level);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--level: ") + e.what());
  }
}

Weight weight_of(const RunConfig& c) {
  if (c.weight.empty()) return Weight::zero(c.rank);
  std::vector<Rational> coords;
  try {
    coords = parse_rational_list(c.weight);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--weight: ") + e.what());
  }
  if (coords.size() != c.rank) throw UsageError("--weight needs exactly rank fundamental coordinates");
  return Weight::from_fundamental(coords);
}

json fraction_array(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_fraction_string(x));
  return a;
}

json envelope(const std::string& command, const RunConfig& c, const Rational& level) {
  json j;
  j["command"] = command;
  j["rank"] = c.rank;
  j["n"] = c.n;
  j["level"] = to_fraction_string(level);
  j["entries"] = json::array();
  j["status"] = "ok";
  j["details"] = json::object();
  return j;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string fundamental_list(const Weight& mu) {
  std::vector<std::string> parts;
  for (const auto& x : mu.fundamental_coords()) parts.push_back(to_display_string(x));
  return "(" + join(parts, ", ") + ")";
}

// ---------------------------------------------------------------- classify

int cmd_classify(const RunConfig& c, std::ostream& out) {
  const bool want_o = c.category_o || !c.finite_dim;
  const bool want_f = c.finite_dim || !c.category_o;
  ClassifyOptions opts;
  opts.oracle_ceiling = c.oracle_ceiling;
  opts.term_guard = c.guard;

  ClassificationResult merged;
  merged.rank = c.rank;
  merged.n = c.n;
  merged.level = critical_level(c.rank, c.n);
  merged.status = "complete";
  std::map<std::vector<Rational>, ClassificationEntry> by_weight;
  auto absorb = [&](const ClassificationResult& r) {
    if (r.status != "complete") merged.status = r.status;
    merged.oracle_filtered = merged.oracle_filtered || r.oracle_filtered;
    for (const auto& e : r.entries) {
      auto [it, inserted] = by_weight.emplace(e.mu.fundamental_coords(), e);
      if (inserted) continue;
      for (const auto& t : e.tags)
        if (std::find(it->second.tags.begin(), it->second.tags.end(), t) == it->second.tags.end())
          it->second.tags.push_back(t);
      if (!it->second.s_label) it->second.s_label = e.s_label;
    }
  };
  if (want_o) absorb(classify_category_O(c.rank, c.n, opts));
  if (want_f) absorb(classify_finite_dim(c.rank, c.n));
  for (auto& [k, e] : by_weight) merged.entries.push_back(std::move(e));
  merged = certify(std::move(merged), c.mmax);

  RootSystem rs(c.rank);
  // admissibility is asserted for the n = 1 list and for every finite-dimensional entry
  bool consistent = true;
  for (const auto& e : merged.entries) {
    bool asserted = c.n == 1 || std::find(e.tags.begin(), e.tags.end(), "finite-dim") != e.tags.end();
    if (asserted && !e.admissibility->admissible) consistent = false;
  }

  if (c.json_out) {
    json j = envelope("classify", c, merged.level);
    json pi = json::array(), labels = json::array();
    for (const auto& e : merged.entries) {
      json row;
      row["weight_fundamental"] = fraction_array(e.mu.fundamental_coords());
      row["tags"] = e.tags;
      row["admissible"] = e.admissibility->admissible;
      j["entries"].push_back(row);
      pi.push_back(format_coroot_set(rs, e.admissibility->simple_coroots));
      labels.push_back(e.s_label ? *e.s_label : "");
    }
    j["status"] = consistent ? merged.status : "inconsistent";
    j["details"]["pi_check"] = pi;
    j["details"]["labels"] = labels;
    j["details"]["oracle_filtered"] = merged.oracle_filtered;
    out << j.dump(2) << "\n";
  } else {
    out << "classify rank=" << c.rank << " n=" << c.n << " level=" << to_display_string(merged.level)
        << " status=" << merged.status << (merged.oracle_filtered ? " (oracle-filtered)" : "") << "\n";
    std::vector<std::array<std::string, 6>> rows;
    rows.push_back({"weight", "fundamental", "tags", "label", "admissible", "Pi_check"});
    for (const auto& e : merged.entries)
      rows.push_back({e.mu.to_fundamental_string(), fundamental_list(e.mu), join(e.tags, ","),
                      e.s_label ? *e.s_label : "-", e.admissibility->admissible ? "true" : "false",
                      format_coroot_set(rs, e.admissibility->simple_coroots)});
    std::array<std::size_t, 6> width{};
    for (const auto& r : rows)
      for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], r[i].size());
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < 5; ++i) out << std::left << std::setw(static_cast<int>(width[i] + 2)) << r[i];
      out << r[5] << "\n";
    }
    out << merged.entries.size() << " rows\n";
  }
  if (!consistent) throw InconsistencyError("an entry expected to be admissible failed certification");
  return 0;
}

// ---------------------------------------------------------------- check-singular

int cmd_check_singular(const RunConfig& c, std::ostream& out) {
  const Rational level = level_of(c);
  SingularReport r = check_singular(c.rank, c.n, level, c.guard);
  const bool at_critical = level == critical_level(c.rank, c.n);
  auto g = std::make_shared<const LieAlgebra>(c.rank);
  VermaModule N(g, level, c.guard);
  if (c.json_out) {
    json j = envelope("check-singular", c, level);
    j["status"] = r.singular ? "PASS" : "FAIL";
    json res = json::object();
    for (const auto& [label, v] : r.residuals) res[label] = v.size();
    j["details"]["residual_terms"] = r.residual_terms();
    j["details"]["residuals"] = res;
    j["details"]["vector_terms"] = r.vector.size();
    out << j.dump(2) << "\n";
  } else {
    out << "check-singular rank=" << c.rank << " n=" << c.n << " level=" << to_display_string(level) << "\n";
    out << "v_n: " << r.vector.size() << " terms\n";
    for (const auto& [label, v] : r.residuals) {
      out << "  " << label << " v_n: " << v.size() << " terms";
      if (!v.is_zero() && v.size() <= 8) out << "  = " << N.to_string(v);
      out << "\n";
    }
    out << "residual terms: " << r.residual_terms() << "\n";
    out << (r.singular ? "PASS" : "FAIL") << "\n";
  }
  if (at_critical && !r.singular) throw InconsistencyError("v_n is not singular at the critical level");
  return 0;
}

// ---------------------------------------------------------------- p0

int cmd_p0(const RunConfig& c, std::ostream& out) {
  EnvelopingAlgebra U(c.rank, c.guard);
  const LieAlgebra& g = U.lie();
  P0Comparison cmp = compare_p0(U, c.n, c.oracle_ceiling);
  std::vector<std::pair<std::string, CartanPolynomial>> explicit_polys;
  for (std::size_t i = 1; i <= c.rank; ++i) explicit_polys.emplace_back("p" + std::to_string(i), explicit_p(g, i, c.n));
  explicit_polys.emplace_back("q", explicit_q(g, c.n));

  // the explicit polynomials are members for every n, and span P_0 for n = 1
  bool consistent = cmp.all_members && (c.n != 1 || cmp.spans_equal);

  if (c.json_out) {
    json j = envelope("p0", c, critical_level(c.rank, c.n));
    json basis = json::array();
    for (const auto& p : cmp.oracle_basis) basis.push_back(p.to_string());
    json ex = json::object();
    for (const auto& [name, p] : explicit_polys) ex[name] = p.to_string();
    j["details"]["oracle_basis"] = basis;
    j["details"]["explicit"] = ex;
    j["details"]["dim_R"] = cmp.dim_R;
    j["details"]["dim_R0"] = cmp.dim_R0;
    if (c.compare) {
      json mem = json::object();
      for (const auto& [name, in] : cmp.membership) mem[name] = in;
      j["details"]["membership"] = mem;
      j["details"]["spans_equal"] = cmp.spans_equal;
      j["details"]["spans_equal_with_q"] = cmp.spans_equal_with_q;
      j["details"]["q_in_p_span"] = cmp.q_in_p_span;
    }
    j["status"] = consistent ? "ok" : "inconsistent";
    out << j.dump(2) << "\n";
  } else {
    out << "p0 rank=" << c.rank << " n=" << c.n << " level=" << to_display_string(critical_level(c.rank, c.n)) << "\n";
    out << "dim R = " << cmp.dim_R << ", dim R_0 = " << cmp.dim_R0 << "\n";
    out << "oracle P_0 basis (dim " << cmp.oracle_dim << "):\n";
    for (const auto& p : cmp.oracle_basis) out << "  " << p.to_string() << "\n";
    out << "explicit polynomials:\n";
    for (const auto& [name, p] : explicit_polys) out << "  " << name << " = " << p.to_string() << "\n";
    if (c.compare) {
      for (const auto& [name, in] : cmp.membership) out << name << " in P_0: " << (in ? "true" : "false") << "\n";
      out << "q in span{p_i}: " << (cmp.q_in_p_span ? "true" : "false") << "\n";
      out << "oracle span == explicit span: " << (cmp.spans_equal ? "true" : "false") << "\n";
      out << "oracle span == span{p_i, q}: " << (cmp.spans_equal_with_q ? "true" : "false") << "\n";
    }
  }
  if (!consistent) throw InconsistencyError("explicit polynomials disagree with the oracle");
  return 0;
}

// ---------------------------------------------------------------- admissible

int cmd_admissible(const RunConfig& c, std::ostream& out) {
  const Rational level = level_of(c);
  const Weight mu = weight_of(c);
  RootSystem rs(c.rank);
  AdmissibilityResult r;
  try {
    r = is_admissible(rs, {level, mu}, c.mmax);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const AffineRealRoot d_e1{-Root::epsilon(c.rank, 1), 1};
  const Rational pairing = shifted_pairing(rs, {level, mu}, d_e1);
  if (c.json_out) {
    json j = envelope("admissible", c, level);
    json row;
    row["weight_fundamental"] = fraction_array(mu.fundamental_coords());
    row["tags"] = json::array();
    row["admissible"] = r.admissible;
    j["entries"].push_back(row);
    j["details"]["pi_check"] = format_coroot_set(rs, r.simple_coroots);
    j["details"]["regular"] = r.regular;
    j["details"]["full_rank"] = r.full_rank;
    j["details"]["m_max"] = r.m_max;
    j["details"]["pairing_delta_minus_e1"] = to_fraction_string(pairing);
    if (r.violation) j["details"]["violation"] = r.violation->label(rs);
    out << j.dump(2) << "\n";
  } else {
    out << "admissible: " << (r.admissible ? "true" : "false") << "; Pi_check: " << format_coroot_set(rs, r.simple_coroots)
        << "\n";
    out << "level " << to_display_string(level) << ", weight " << mu.to_fundamental_string() << "\n";
    out << "<lambda+rho, " << d_e1.label(rs) << "> = " << to_display_string(pairing) << "\n";
    out << "no pairing in -Z_+: " << (r.regular ? "true" : "false");
    if (r.violation)
      out << " (violated at " << r.violation->label(rs)
          << ", pairing " << to_display_string(shifted_pairing(rs, {level, mu}, *r.violation)) << ")";
    out << "\nintegral coroots span rank l+1: " << (r.full_rank ? "true" : "false") << "\n";
    out << "m_max = " << r.m_max << ", integral coroots in window: " << r.integral_count << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- dim

int cmd_dim(const RunConfig& c, std::ostream& out) {
  const Weight mu = weight_of(c);
  RootSystem rs(c.rank);
  if (!rs.is_dominant_integral(mu)) throw UsageError("--weight must be dominant integral");
  Integer d = rs.weyl_dim(mu);
  if (c.json_out) {
    json j = envelope("dim", c, critical_level(c.rank, c.n));
    json row;
    row["weight_fundamental"] = fraction_array(mu.fundamental_coords());
    row["tags"] = json::array();
    row["admissible"] = false;
    j["entries"].push_back(row);
    j["details"]["dimension"] = d.get_str();
    out << j.dump(2) << "\n";
  } else {
    out << d.get_str() << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------- identities

int cmd_identities(const RunConfig& c, std::ostream& out) {
  EnvelopingAlgebra U(c.rank, c.guard);
  auto results = run_identity_suite(U, 3);
  struct Tally {
    std::size_t passed = 0, skipped = 0, failed = 0;
  };
  std::map<std::string, Tally> tally;
  std::vector<std::string> failures;
  for (const auto& r : results) {
    auto& t = tally[r.name];
    if (r.skipped) ++t.skipped;
    else if (r.holds) ++t.passed;
    else {
      ++t.failed;
      failures.push_back(r.name + " " + r.params);
    }
  }
  std::vector<std::string> order;
  for (int id = 1; id <= 12; ++id) order.push_back(std::to_string(id));
  order.push_back("commuting");
  order.push_back("multinomial");
  if (c.json_out) {
    json j = envelope("identities", c, critical_level(c.rank, c.n));
    json t = json::object();
    for (const auto& name : order)
      t[name] = {{"passed", tally[name].passed}, {"skipped", tally[name].skipped}, {"failed", tally[name].failed}};
    j["details"]["tally"] = t;
    j["details"]["failures"] = failures;
    j["status"] = failures.empty() ? "ok" : "inconsistent";
    out << j.dump(2) << "\n";
  } else {
    out << "identities rank=" << c.rank << " (parameters up to 3)\n";
    for (const auto& name : order) {
      const auto& t = tally[name];
      out << "  " << std::left << std::setw(12) << name << " passed " << t.passed << ", skipped " << t.skipped
          << ", failed " << t.failed << "\n";
    }
    for (const auto& f : failures) out << "FAILED: " << f << "\n";
    out << "all identities hold: " << (failures.empty() ? "true" : "false") << "\n";
  }
  if (!failures.empty()) throw InconsistencyError("identity check failed");
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for B_l^(1) at level n - l + 1/2"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--rank", cfg.rank, "rank l (>= 2)");
    sub->add_option("--n", cfg.n, "n (>= 1); level is n - l + 1/2");
    sub->add_flag("--json", cfg.json_out, "JSON output");
    sub->add_option("--guard", cfg.guard, "term-count guard (default: BLVOA_GUARD or 5000000)");
    sub->add_option("--oracle-ceiling", cfg.oracle_ceiling, "largest dim V(2n e1) the oracle will build");
    sub->add_option("--mmax", cfg.mmax, "override the admissibility mode window");
  };
  auto* classify = app.add_subcommand("classify", "highest weights of irreducible modules");
  add_common(classify);
  classify->add_flag("--category-o", cfg.category_o, "category O list");
  classify->add_flag("--finite-dim", cfg.finite_dim, "finite-dimensional list");
  auto* singular = app.add_subcommand("check-singular", "verify the singular vector v_n");
  add_common(singular);
  singular->add_option("--level", cfg.level, "level as p/q (default n - l + 1/2)");
  auto* p0 = app.add_subcommand("p0", "polynomials of P_0 from the oracle and explicit formulas");
  add_common(p0);
  p0->add_flag("--compare", cfg.compare, "compare oracle and explicit spans");
  auto* adm = app.add_subcommand("admissible", "admissibility of k Lambda_0 + mu");
  add_common(adm);
  adm->add_option("--level", cfg.level, "level as p/q (default n - l + 1/2)");
  adm->add_option("--weight", cfg.weight, "fundamental coordinates, comma separated");
  auto* dim = app.add_subcommand("dim", "Weyl dimension of V(mu)");
  add_common(dim);
  dim->add_option("--weight", cfg.weight, "fundamental coordinates, comma separated");
  auto* ids = app.add_subcommand("identities", "adjoint-action identity suite");
  add_common(ids);

  try {
    cfg.guard = default_guard();
    app.parse(argc, argv);
    validate(cfg);
    if (*classify) return cmd_classify(cfg, out);
    if (*singular) return cmd_check_singular(cfg, out);
    if (*p0) return cmd_p0(cfg, out);
    if (*adm) return cmd_admissible(cfg, out);
    if (*dim) return cmd_dim(cfg, out);
    if (*ids) return cmd_identities(cfg, out);
    return 1;
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const GuardExceeded& e) {
    err << "guard: " << e.what() << "\n";
    return 2;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace blvoa
