#include "doctest.h"

#include "blvoa/classify.hpp"
#include "blvoa/zero_weight.hpp"

#include <algorithm>

using namespace blvoa;

namespace {

Weight fw(std::initializer_list<Rational> c) { return Weight::from_fundamental(std::vector<Rational>(c)); }

std::vector<Weight> weights_of(const ClassificationResult& r) {
  std::vector<Weight> out;
  for (const auto& e : r.entries) out.push_back(e.mu);
  return out;
}

bool has_tag(const ClassificationEntry& e, const std::string& t) {
  return std::find(e.tags.begin(), e.tags.end(), t) != e.tags.end();
}

}  // namespace

TEST_CASE("mu_S formulas") {
  CHECK(mu_S({}, 2) == Weight::zero(2));
  CHECK(mu_S_prime({}, 2) == fw({0, 1}));
  CHECK(mu_S({1}, 2) == fw({Rational(-1, 2), 0}));
  CHECK(mu_S_prime({1}, 2) == fw({Rational(-3, 2), 1}));
  // S = {1, 2} at l = 3: h_2 = 2 - 5/2, h_1 = 1 - 2*2 + 5/2
  CHECK(mu_S({1, 2}, 3) == fw({Rational(-1, 2), Rational(-1, 2), 0}));
  CHECK(mu_S_prime({1, 2}, 3) == fw({Rational(1, 2), Rational(-3, 2), 1}));
  CHECK_THROWS_AS(mu_S({3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(mu_S({0}, 3), std::invalid_argument);
}

TEST_CASE("triangular systems") {
  LieAlgebra g2(2);
  auto sols = solve_triangular(g2, 1);
  std::vector<Weight> expected{fw({Rational(-3, 2), 1}), fw({Rational(-1, 2), 0}), Weight::zero(2), fw({0, 1})};
  CHECK(sols == expected);
  for (const auto& mu : sols)
    for (std::size_t i = 1; i <= 2; ++i) CHECK(explicit_p(g2, i, 1).evaluate(mu) == 0);
  for (std::size_t l = 2; l <= 3; ++l)
    for (unsigned n = 1; n <= 2; ++n) {
      LieAlgebra g(l);
      auto s = solve_triangular(g, n);
      std::size_t bound = 1;
      for (std::size_t i = 0; i < l; ++i) bound *= 2 * n;
      CHECK(s.size() <= bound);
      for (const auto& mu : s)
        for (std::size_t i = 1; i <= l; ++i) CHECK(explicit_p(g, i, n).evaluate(mu) == 0);
    }
}

TEST_CASE("category O at n = 1") {
  for (std::size_t l = 2; l <= 4; ++l) {
    ClassificationResult r = classify_category_O(l, 1);
    CHECK(r.status == "complete");
    CHECK(r.entries.size() == (std::size_t{1} << l));
    // same set as the triangular system
    LieAlgebra g(l);
    CHECK(weights_of(r) == solve_triangular(g, 1));
    if (l <= 3) {
      EnvelopingAlgebra U(l);
      auto basis = p0_basis(U, generate_module(U, 1));
      for (const auto& e : r.entries)
        for (const auto& p : basis) CHECK(p.evaluate(e.mu) == 0);
    }
  }
  ClassificationResult r2 = classify_category_O(2, 1);
  std::vector<Weight> expected{fw({Rational(-3, 2), 1}), fw({Rational(-1, 2), 0}), Weight::zero(2), fw({0, 1})};
  CHECK(weights_of(r2) == expected);
  CHECK(*r2.entries[0].s_label == "S'={1}");
  CHECK(*r2.entries[2].s_label == "S={}");
}

TEST_CASE("finite-dimensional lists") {
  ClassificationResult f21 = classify_finite_dim(2, 1);
  CHECK(weights_of(f21) == std::vector<Weight>{Weight::zero(2), fw({0, 1})});
  std::vector<Weight> dominant;
  for (const auto& e : classify_category_O(2, 1).entries)
    if (has_tag(e, "finite-dim")) dominant.push_back(e.mu);
  CHECK(dominant == weights_of(f21));

  ClassificationResult f22 = classify_finite_dim(2, 2);
  std::vector<Weight> expected{Weight::zero(2), fw({0, 1}), fw({0, 2}), fw({0, 3}), fw({1, 0}), fw({1, 1})};
  CHECK(weights_of(f22) == expected);
  LieAlgebra g2(2);
  RootSystem rs(2);
  for (std::size_t l = 2; l <= 3; ++l)
    for (unsigned n = 1; n <= 3; ++n) {
      LieAlgebra g(l);
      CartanPolynomial q = explicit_q(g, n);
      for (const auto& e : classify_finite_dim(l, n).entries) {
        CHECK(g.roots().is_dominant_integral(e.mu));
        CHECK(inner(e.mu, Weight(Root::epsilon(l, 1))) <= Rational(n) - Rational(1, 2));
        CHECK(q.evaluate(e.mu) == 0);
      }
    }
  // the bound is sharp: dominant weights just above it do not zero q
  CHECK(explicit_q(g2, 1).evaluate(fw({1, 0})) != 0);
  CHECK(explicit_q(g2, 1).evaluate(fw({0, 2})) != 0);
}

TEST_CASE("candidate lists for n = 2") {
  ClassificationResult r = classify_category_O(2, 2);
  CHECK(r.status == "candidate");
  CHECK(r.oracle_filtered);
  EnvelopingAlgebra U(2);
  auto basis = p0_basis(U, generate_module(U, 2));
  LieAlgebra g(2);
  CartanPolynomial q = explicit_q(g, 2);
  for (const auto& e : r.entries) {
    CHECK(q.evaluate(e.mu) == 0);
    for (const auto& p : basis) CHECK(p.evaluate(e.mu) == 0);
  }
  // every finite-dimensional module appears among the candidates
  auto cands = weights_of(r);
  for (const auto& mu : weights_of(classify_finite_dim(2, 2)))
    CHECK(std::find(cands.begin(), cands.end(), mu) != cands.end());
  ClassifyOptions no_oracle;
  no_oracle.use_oracle = false;
  ClassificationResult loose = classify_category_O(2, 2, no_oracle);
  CHECK_FALSE(loose.oracle_filtered);
  CHECK(loose.entries.size() >= r.entries.size());
}

TEST_CASE("admissibility certificates") {
  for (std::size_t l = 2; l <= 3; ++l) {
    ClassificationResult r = certify(classify_category_O(l, 1));
    CHECK(all_admissible(r));
    for (const auto& e : r.entries) CHECK(e.admissibility->simple_coroots.size() == l + 1);
  }
  for (std::size_t l = 2; l <= 3; ++l)
    for (unsigned n = 1; n <= 2; ++n) {
      RootSystem rs(l);
      ClassificationResult r = certify(classify_finite_dim(l, n));
      CHECK(all_admissible(r));
      for (const auto& e : r.entries) {
        Rational pairing = shifted_pairing(rs, {r.level, e.mu}, {-Root::epsilon(l, 1), 1});
        Rational expected = 2 * Rational(n) - 2 * inner(e.mu, Weight(Root::epsilon(l, 1)));
        CHECK(pairing == expected);
        CHECK(is_integer(pairing));
        CHECK(pairing > 0);
      }
      // μ = 0 entry is λ_n
      REQUIRE(r.entries.front().mu == Weight::zero(l));
      std::vector<AffineRealRoot> pi{{-Root::epsilon(l, 1), 1}};
      for (std::size_t i = 1; i <= l; ++i) pi.push_back({rs.simple_root(i), 0});
      CHECK(r.entries.front().admissibility->simple_coroots == pi);
    }
}
