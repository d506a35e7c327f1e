// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "blvoa/admissible.hpp"
#include "blvoa/affine.hpp"
#include "blvoa/classify.hpp"
#include "blvoa/identities.hpp"
#include "blvoa/zero_weight.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace blvoa;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes << " [failed: " << what << "]";
    }
  }
};

Root eps(std::size_t l, std::size_t i) { return Root::epsilon(l, i); }

// 2n e_1 = 2n w_1
std::vector<Rational> two_n_w1(std::size_t l, unsigned n) {
  std::vector<Rational> c(l);
  c[0] = 2 * n;
  return c;
}

std::string str(const Rational& q) { return to_fraction_string(q); }

bool has_tag(const ClassificationEntry& e, const std::string& t) {
  return std::find(e.tags.begin(), e.tags.end(), t) != e.tags.end();
}

std::string expected_pi(std::size_t l) {
  std::string s = "{(δ−ε_1)∨";
  for (std::size_t i = 1; i <= l; ++i) s += ", α_" + std::to_string(i) + "∨";
  return s + "}";
}

void singular_vector(Outcome& o) {
  for (auto [l, n] : std::vector<std::pair<std::size_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    const Rational k = critical_level(l, n);
    const std::string tag = "(" + std::to_string(l) + "," + std::to_string(n) + ")";
    o.require(check_singular(l, n, k).singular, tag + " singular at k=" + str(k));
    for (const Rational& off : std::vector<Rational>{k - Rational(1, 2), k + Rational(1, 2)}) {
      SingularReport r = check_singular(l, n, off);
      o.require(!r.singular && r.residual_terms() > 0, tag + " nonzero residual at k=" + str(off));
    }
  }
  o.notes << " (2,1) (3,1) (2,2) singular only at n-l+1/2";
}

void oracle_dimensions(Outcome& o) {
  for (auto [l, n] : std::vector<std::pair<std::size_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}}) {
    EnvelopingAlgebra U(l);
    AdModule R = generate_module(U, n);
    RootSystem rs(l);
    const std::size_t dimR = R.dimension(), dimR0 = R.zero_space().size();
    const std::size_t weyl = rs.weyl_dim(Weight::from_fundamental(two_n_w1(l, n))).get_ui();
    o.notes << " (" << l << "," << n << "): dim R=" << dimR << " dim R_0=" << dimR0 << ";";
    const std::string tag = "(" + std::to_string(l) + "," + std::to_string(n) + ")";
    if (l == 2 && n == 1) {
      o.require(dimR == 14, tag + " dim R == 14");
      o.require(dimR0 == 2, tag + " dim R_0 == 2");
    } else {
      o.require(dimR == weyl, tag + " dim R == weyl_dim(2n e1) = " + std::to_string(weyl));
      o.require(dimR0 <= l, tag + " dim R_0 <= l");
    }
  }
}

void p0_equality_n1(Outcome& o) {
  for (std::size_t l : {2, 3}) {
    EnvelopingAlgebra U(l);
    P0Comparison c = compare_p0(U, 1);
    o.require(c.spans_equal, "l=" + std::to_string(l) + " oracle span == span{p_i}");
    o.require(c.q_in_p_span, "l=" + std::to_string(l) + " q in span{p_i}");
    o.notes << " l=" << l << ": dim " << c.oracle_dim << ";";
  }
}

void p0_membership_n2(Outcome& o) {
  EnvelopingAlgebra U(2);
  P0Comparison c = compare_p0(U, 2);
  for (const auto& [name, in] : c.membership) {
    o.require(in, name + " in P_0");
    o.notes << " " << name << (in ? " in" : " not in") << " P_0;";
  }
}

void classification_counts(Outcome& o) {
  for (std::size_t l : {2, 3, 4}) {
    ClassificationResult r = classify_category_O(l, 1);
    o.require(r.entries.size() == (std::size_t{1} << l), "l=" + std::to_string(l) + " has 2^l entries");
    o.notes << " l=" << l << ": " << r.entries.size() << ";";
    if (l <= 3) {
      EnvelopingAlgebra U(l);
      auto basis = p0_basis(U, generate_module(U, 1));
      for (const auto& e : r.entries)
        for (const auto& p : basis)
          o.require(sgn(p.evaluate(e.mu)) == 0, "entry " + e.mu.to_fundamental_string() + " zeroes P_0");
    }
    if (l == 2) {
      std::vector<std::vector<Rational>> got, want = {
          {0, 0}, {Rational(-1, 2), 0}, {0, 1}, {Rational(-3, 2), 1}};
      for (const auto& e : r.entries) got.push_back(e.mu.fundamental_coords());
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      o.require(got == want, "l=2 list matches");
    }
  }
}

void finite_dim_classification(Outcome& o) {
  ClassificationResult f1 = classify_finite_dim(2, 1);
  std::vector<std::vector<Rational>> got, want = {{0, 0}, {0, 1}}, dominant;
  for (const auto& e : f1.entries) got.push_back(e.mu.fundamental_coords());
  std::sort(got.begin(), got.end());
  o.require(got == want, "finite_dim(2,1) == {0, w2}");
  RootSystem rs2(2);
  for (const auto& e : classify_category_O(2, 1).entries)
    if (rs2.is_dominant_integral(e.mu)) dominant.push_back(e.mu.fundamental_coords());
  std::sort(dominant.begin(), dominant.end());
  o.require(got == dominant, "finite_dim(2,1) == dominant part of the category O list");

  ClassificationResult f2 = classify_finite_dim(2, 2);
  o.require(f2.entries.size() == 6, "finite_dim(2,2) has 6 entries");
  LieAlgebra g(2);
  CartanPolynomial q = explicit_q(g, 2);
  for (const auto& e : f2.entries) {
    o.require(inner(e.mu, eps(2, 1)) <= Rational(3, 2), e.mu.to_fundamental_string() + " has (mu,e1) <= 3/2");
    o.require(sgn(q.evaluate(e.mu)) == 0, e.mu.to_fundamental_string() + " zeroes q");
  }
  o.notes << " (2,1): " << f1.entries.size() << " entries, (2,2): " << f2.entries.size() << " entries";
}

void admissibility(Outcome& o) {
  std::size_t certified = 0;
  for (std::size_t l : {2, 3}) {
    RootSystem rs(l);
    const AffineRealRoot d_e1{-eps(l, 1), 1};
    for (unsigned n : {1u, 2u}) {
      const Rational k = critical_level(l, n);
      const std::string tag = "(" + std::to_string(l) + "," + std::to_string(n) + ")";
      AffineWeight lam{k, Weight::zero(l)};
      AdmissibilityResult r = is_admissible(rs, lam);
      o.require(r.admissible, tag + " lambda_n admissible");
      o.require(shifted_pairing(rs, lam, d_e1) == Rational(2 * n), tag + " pairing with (delta-e1) == 2n");
      o.require(format_coroot_set(rs, r.simple_coroots) == expected_pi(l), tag + " Pi_check of lambda_n");
      ++certified;
      for (const auto& e : classify_finite_dim(l, n).entries) {
        AffineWeight w{k, e.mu};
        const Rational p = shifted_pairing(rs, w, d_e1);
        o.require(p == Rational(2 * n) - 2 * inner(e.mu, eps(l, 1)), tag + " finite-dim pairing formula");
        o.require(sgn(p) >= 0 && p.get_den() == 1, tag + " finite-dim pairing in N");
        o.require(is_admissible(rs, w).admissible, tag + " finite-dim " + e.mu.to_fundamental_string());
        ++certified;
      }
    }
    ClassificationResult c = certify(classify_category_O(l, 1));
    o.require(c.entries.size() == (std::size_t{1} << l) && all_admissible(c),
              "l=" + std::to_string(l) + " all lambda_S, lambda_S' admissible");
    certified += c.entries.size();
  }
  o.notes << " " << certified << " weights certified";
}

void identity_suite(Outcome& o) {
  for (std::size_t l : {2, 3}) {
    EnvelopingAlgebra U(l);
    std::size_t held = 0, skipped = 0;
    for (const auto& r : run_identity_suite(U, 3)) {
      if (r.skipped) {
        ++skipped;
        o.require(l == 2, "no skips at l=3 (" + r.name + ")");
        continue;
      }
      o.require(r.holds, "l=" + std::to_string(l) + " " + r.name + " " + r.params);
      held += r.holds;
    }
    o.notes << " l=" << l << ": " << held << " hold, " << skipped << " skipped;";
  }
}

void closed_forms(Outcome& o) {
  for (std::size_t l = 2; l <= 5; ++l) {
    RootSystem rs(l);
    std::vector<Rational> two_w1(l), w1(l);
    two_w1[0] = 2;
    w1[0] = 1;
    const long L = static_cast<long>(l);
    o.require(rs.weyl_dim(Weight::from_fundamental(two_w1)) == 2 * L * L + 3 * L, "weyl_dim(2w1) l=" + std::to_string(l));
    o.require(rs.weyl_dim(Weight::from_fundamental(w1)) == 2 * L + 1, "weyl_dim(w1) l=" + std::to_string(l));
  }
  o.notes << " l=2..5";
}

UEAElement random_element(const EnvelopingAlgebra& U, std::mt19937& gen) {
  std::uniform_int_distribution<std::size_t> pick(0, U.lie().dim() - 1);
  std::uniform_int_distribution<int> len(0, 3), coef(-3, 3), terms(1, 2);
  UEAElement out;
  const int t = terms(gen);
  for (int s = 0; s < t; ++s) {
    std::vector<std::size_t> w(len(gen));
    for (auto& x : w) x = pick(gen);
    out.axpy(Rational(coef(gen)), U.word(w));
  }
  return out;
}

std::size_t jacobi_failures(const LieAlgebra& g) {
  auto nested = [&](std::size_t x, std::size_t y, std::size_t z, std::map<std::size_t, Rational>& acc) {
    for (const auto& [w, c] : g.bracket(y, z))
      for (const auto& [v, d] : g.bracket(x, w)) acc[v] += c * d;
  };
  std::size_t failures = 0;
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (std::size_t y = 0; y < g.dim(); ++y)
      for (std::size_t z = 0; z < g.dim(); ++z) {
        std::map<std::size_t, Rational> acc;
        nested(x, y, z, acc);
        nested(y, z, x, acc);
        nested(z, x, y, acc);
        if (std::any_of(acc.begin(), acc.end(), [](const auto& kv) { return sgn(kv.second) != 0; })) ++failures;
      }
  return failures;
}

void property_suites(Outcome& o) {
  {
    std::mt19937 gen(7001);
    std::size_t bad = 0;
    for (int t = 0; t < 200; ++t) {
      EnvelopingAlgebra U(t % 2 ? 3 : 2);
      UEAElement a = random_element(U, gen), b = random_element(U, gen), c = random_element(U, gen);
      if (U.multiply(U.multiply(a, b), c) != U.multiply(a, U.multiply(b, c))) ++bad;
    }
    o.require(bad == 0, "PBW associativity");
    o.notes << " associativity 200/200" << (bad ? " with failures" : "") << ";";
  }
  for (std::size_t l : {2, 3}) o.require(jacobi_failures(LieAlgebra(l)) == 0, "Jacobi l=" + std::to_string(l));
  o.notes << " Jacobi l=2,3;";
  {
    auto g = std::make_shared<const LieAlgebra>(2);
    VermaModule N(g, Rational(-1, 2));
    std::mt19937 gen(7002);
    std::uniform_int_distribution<std::size_t> pick(0, g->dim() - 1);
    std::uniform_int_distribution<int> mode(-2, 2), neg(-2, -1), len(0, 2);
    std::size_t bad = 0;
    for (int t = 0; t < 100; ++t) {
      VermaVector v = VermaVector::vacuum();
      const int steps = len(gen);
      for (int s = 0; s < steps; ++s) v = N.apply(AffineGenerator::loop(pick(gen), neg(gen)), v);
      AffineGenerator x = AffineGenerator::loop(pick(gen), mode(gen)), y = AffineGenerator::loop(pick(gen), mode(gen));
      AffineBracket br = affine_bracket(*g, x, y);
      VermaVector rhs = v * (br.central * N.level());
      for (const auto& [z, c] : br.loop_part) rhs.axpy(c, N.apply(AffineGenerator::loop(z, br.mode), v));
      if (N.apply(x, N.apply(y, v)) - N.apply(y, N.apply(x, v)) != rhs) ++bad;
    }
    o.require(bad == 0, "apply-bracket compatibility");
    o.notes << " apply-bracket 100;";
  }
  for (std::size_t l : {2, 3}) {
    auto g = std::make_shared<const LieAlgebra>(l);
    EnvelopingAlgebra U(g);
    UEAElement ubar = U.power(U.e(eps(l, 1)), 2) * Rational(-1, 4);
    for (std::size_t j = 2; j <= l; ++j) ubar += U.multiply(U.e(eps(l, 1) - eps(l, j)), U.e(eps(l, 1) + eps(l, j)));
    for (unsigned n : {1u, 2u}) {
      VermaModule N(g, critical_level(l, n));
      o.require(fz_image(U, build_singular_candidate(N, n)) == U.power(ubar, n),
                "fz_image(v_n) l=" + std::to_string(l) + " n=" + std::to_string(n));
    }
  }
  o.notes << " fz_image(v_n) = v_n' for l=2,3 n=1,2";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"singular vector", singular_vector},
      {"oracle dimensions", oracle_dimensions},
      {"P_0 equality at n=1", p0_equality_n1},
      {"P_0 membership at n=2, l=2", p0_membership_n2},
      {"classification counts", classification_counts},
      {"finite-dimensional classification", finite_dim_classification},
      {"admissibility", admissibility},
      {"identity suite", identity_suite},
      {"closed forms", closed_forms},
      {"algebraic property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " " << criteria[i].first << ":"
              << o.notes.str() << " (" << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
