#include "doctest.h"

#include "blvoa/admissible.hpp"
#include "blvoa/affine.hpp"

#include <random>

using namespace blvoa;

namespace {

Root eps(std::size_t l, std::size_t i) { return Root::epsilon(l, i); }

AffineGenerator loop(std::size_t x, int m) { return AffineGenerator::loop(x, m); }

VermaVector bracket_action(const VermaModule& N, const AffineGenerator& x, const AffineGenerator& y,
                           const VermaVector& v) {
  if (x.central || y.central) return VermaVector{};
  AffineBracket br = affine_bracket(N.lie(), x, y);
  VermaVector out = v * (br.central * N.level());
  for (const auto& [z, c] : br.loop_part) out.axpy(c, N.apply(loop(z, br.mode), v));
  return out;
}

}  // namespace

TEST_CASE("affine bracket") {
  LieAlgebra g(2);
  const Root& theta = g.roots().highest_root();
  AffineBracket b = affine_bracket(g, loop(g.e_index(theta), 1), loop(g.f_index(theta), -1));
  CHECK(b.mode == 0);
  CHECK(b.central == 1);
  CHECK(g.compose(b.loop_part) == g.matrix(g.h_index(1)) + g.matrix(g.h_index(2)));
  auto gens = g.chevalley_generators();
  AffineBracket b2 = affine_bracket(g, loop(gens[0].h, 0), loop(gens[0].e, -1));
  CHECK(b2.mode == -1);
  CHECK(b2.central == 0);
  CHECK(b2.loop_part == BasisCombination{{gens[0].e, Rational(2)}});
  AffineBracket b3 = affine_bracket(g, AffineGenerator::c(), loop(gens[0].e, 3));
  CHECK(b3.loop_part.empty());
  CHECK(b3.central == 0);
}

TEST_CASE("vacuum rules") {
  auto g = std::make_shared<const LieAlgebra>(2);
  VermaModule N(g, Rational(-1, 2));
  auto gens = g->chevalley_generators();
  VermaVector one = VermaVector::vacuum();
  CHECK(N.apply(loop(gens[0].e, 0), one).is_zero());
  CHECK(N.apply(loop(gens[0].f, 2), one).is_zero());
  CHECK(N.apply(AffineGenerator::c(), one) == one * Rational(-1, 2));
  const Root& theta = g->roots().highest_root();
  VermaVector v = N.apply(loop(g->e_index(theta), -1), one);
  CHECK(N.apply(loop(g->f_index(theta), 1), v) == one * Rational(-1, 2));
  // normal order: modes ascending, then basis index
  VermaVector w = N.apply_word({loop(gens[0].e, -1), loop(gens[0].f, -2)}, one);
  // e(-1) f(-2) 1 = f(-2) e(-1) 1 + h(-3) 1
  VermaVector expected_w;
  expected_w.add_term({{-2, static_cast<std::uint8_t>(gens[0].f)}, {-1, static_cast<std::uint8_t>(gens[0].e)}}, 1);
  expected_w.add_term({{-3, static_cast<std::uint8_t>(gens[0].h)}}, 1);
  CHECK(w == expected_w);
}

TEST_CASE("singular vector candidate") {
  auto g = std::make_shared<const LieAlgebra>(2);
  VermaModule N(g, critical_level(2, 1));
  CHECK(build_singular_candidate(N, 0) == VermaVector::vacuum());
  VermaVector v1 = build_singular_candidate(N, 1);
  CHECK(v1.size() == 2);
  VermaVector expected = N.apply_word({loop(g->e_index(eps(2, 1)), -1), loop(g->e_index(eps(2, 1)), -1)},
                                      VermaVector::vacuum()) * Rational(-1, 4);
  expected.axpy(1, N.apply_word({loop(g->e_index(eps(2, 1) - eps(2, 2)), -1), loop(g->e_index(eps(2, 1) + eps(2, 2)), -1)},
                                VermaVector::vacuum()));
  CHECK(v1 == expected);
  for (unsigned n = 1; n <= 3; ++n) {
    VermaWeight w = N.weight_of(build_singular_candidate(N, n));
    CHECK(!w.mixed);
    CHECK(w.finite == Root{{2 * static_cast<int>(n), 0}});
    CHECK(w.delta == -2 * static_cast<int>(n));
  }
}

TEST_CASE("singular exactly at the critical level") {
  for (auto [l, n] : std::vector<std::pair<std::size_t, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const Rational k0 = critical_level(l, n);
    for (int j = -2; j <= 2; ++j) {
      SingularReport r = check_singular(l, n, k0 + Rational(j, 2));
      CHECK(r.singular == (j == 0));
      if (j != 0) CHECK(r.residual_terms() > 0);
    }
  }
}

TEST_CASE("off-level residual is n(k+l-n-1/2) e_1(-1) u^{n-1} 1") {
  for (auto [l, n] : std::vector<std::pair<std::size_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}}) {
    auto g = std::make_shared<const LieAlgebra>(l);
    for (int j : {-2, -1, 1, 2}) {
      Rational k = critical_level(l, n) + Rational(j, 2);
      SingularReport r = check_singular(l, n, k);
      VermaModule N(g, k);
      VermaVector base = N.apply(loop(g->chevalley_generators()[0].e, -1), build_singular_candidate(N, n - 1));
      Rational coeff = Rational(n) * (k + static_cast<long>(l) - static_cast<long>(n) - Rational(1, 2));
      for (std::size_t i = 0; i < l; ++i) CHECK(r.residuals[i].second.is_zero());
      CHECK(r.residuals.back().second == base * coeff);
    }
  }
}

TEST_CASE("apply respects the bracket") {
  auto g = std::make_shared<const LieAlgebra>(2);
  VermaModule N(g, Rational(-1, 2));
  std::mt19937 gen(2024);
  std::uniform_int_distribution<std::size_t> pick(0, g->dim() - 1);
  std::uniform_int_distribution<int> mode(-2, 2), neg(-2, -1), len(0, 2);
  for (int t = 0; t < 100; ++t) {
    VermaVector v = VermaVector::vacuum();
    const int steps = len(gen);
    for (int s = 0; s < steps; ++s) v = N.apply(loop(pick(gen), neg(gen)), v);
    AffineGenerator x = (t % 17 == 0) ? AffineGenerator::c() : loop(pick(gen), mode(gen));
    AffineGenerator y = loop(pick(gen), mode(gen));
    VermaVector lhs = N.apply(x, N.apply(y, v)) - N.apply(y, N.apply(x, v));
    CHECK(lhs == bracket_action(N, x, y, v));
  }
}

TEST_CASE("Zhu image of v_n") {
  for (std::size_t l = 2; l <= 3; ++l) {
    auto g = std::make_shared<const LieAlgebra>(l);
    EnvelopingAlgebra U(g);
    VermaModule N(g, critical_level(l, 1));
    CHECK(fz_image(U, VermaVector::vacuum()) == U.one());
    UEAElement v1 = fz_image(U, build_singular_candidate(N, 1));
    UEAElement expected = U.power(U.e(eps(l, 1)), 2) * Rational(-1, 4);
    for (std::size_t j = 2; j <= l; ++j) expected += U.multiply(U.e(eps(l, 1) - eps(l, j)), U.e(eps(l, 1) + eps(l, j)));
    CHECK(v1 == expected);
    for (unsigned n = 2; n <= 3; ++n) CHECK(fz_image(U, build_singular_candidate(N, n)) == U.power(v1, n));
  }
  auto g = std::make_shared<const LieAlgebra>(2);
  EnvelopingAlgebra U(g);
  VermaModule N(g, Rational(1));
  auto gens = g->chevalley_generators();
  VermaVector xy = N.apply_word({loop(gens[0].e, -1), loop(gens[0].f, -1)}, VermaVector::vacuum());
  // x(-1) y(-1) 1 -> y x, although normal ordering produced an h(-2) term
  CHECK(xy.size() == 2);
  CHECK(fz_image(U, xy) == U.multiply(U.generator(gens[0].f), U.generator(gens[0].e)));
  CHECK(fz_image(U, N.apply(loop(gens[0].e, -2), VermaVector::vacuum())) == U.generator(gens[0].e) * Rational(-1));
  VermaVector positive;
  positive.add_term({{1, static_cast<std::uint8_t>(gens[0].e)}}, 1);
  CHECK_THROWS_AS(fz_image(U, positive), std::invalid_argument);
  // reversed-product formula is consistent with normal ordering on random words
  std::mt19937 gen(88);
  std::uniform_int_distribution<std::size_t> pick(0, g->dim() - 1);
  std::uniform_int_distribution<int> mode(-3, -1), len(1, 3);
  for (int t = 0; t < 60; ++t) {
    std::vector<AffineGenerator> word(len(gen));
    std::vector<std::size_t> reversed;
    int shift = 0;
    for (auto& x : word) {
      x = loop(pick(gen), mode(gen));
      shift += -x.mode - 1;
    }
    for (auto it = word.rbegin(); it != word.rend(); ++it) reversed.push_back(it->base);
    CHECK(fz_image(U, N.apply_word(word, VermaVector::vacuum())) == U.word(reversed) * Rational(shift % 2 ? -1 : 1));
  }
}

TEST_CASE("shifted pairings") {
  for (std::size_t l = 2; l <= 3; ++l) {
    RootSystem rs(l);
    for (unsigned n = 1; n <= 3; ++n) {
      AffineWeight lam{critical_level(l, n), Weight::zero(l)};
      CHECK(shifted_pairing(rs, lam, {-eps(l, 1), 1}) == 2 * static_cast<int>(n));
      for (std::size_t i = 1; i <= l; ++i) CHECK(shifted_pairing(rs, lam, {rs.simple_root(i), 0}) == 1);
    }
    AffineWeight zero_mu{Rational(-static_cast<long>(l)) + Rational(3, 2), Weight::zero(l)};
    CHECK(shifted_pairing(rs, zero_mu, {rs.simple_root(1), 0}) == 1);
  }
}

TEST_CASE("admissibility of lambda_n") {
  for (std::size_t l = 2; l <= 3; ++l)
    for (unsigned n = 1; n <= 2; ++n) {
      RootSystem rs(l);
      AdmissibilityResult r = is_admissible(rs, {critical_level(l, n), Weight::zero(l)});
      CHECK(r.admissible);
      std::vector<AffineRealRoot> expected{{-eps(l, 1), 1}};
      for (std::size_t i = 1; i <= l; ++i) expected.push_back({rs.simple_root(i), 0});
      CHECK(r.simple_coroots == expected);
    }
  RootSystem rs(2);
  AdmissibilityResult r = is_admissible(rs, {Rational(-1, 2), Weight::zero(2)});
  CHECK(format_coroot_set(rs, r.simple_coroots) == "{(δ−ε_1)∨, α_1∨, α_2∨}");
}

TEST_CASE("admissibility edge cases") {
  RootSystem rs(2);
  AdmissibilityResult dom = is_admissible(rs, {Rational(0), Weight::zero(2)});
  CHECK(dom.admissible);
  CHECK(format_coroot_set(rs, dom.simple_coroots) == "{(δ−ε_1−ε_2)∨, α_1∨, α_2∨}");
  // μ = -3ω_1 at k = -1/2: ⟨λ+ρ, α_1∨⟩ = -2
  AdmissibilityResult bad = is_admissible(rs, {Rational(-1, 2), Weight::from_fundamental({Rational(-3), Rational(0)})});
  CHECK_FALSE(bad.admissible);
  CHECK_FALSE(bad.regular);
  REQUIRE(bad.violation);
  CHECK(shifted_pairing(rs, {Rational(-1, 2), Weight::from_fundamental({Rational(-3), Rational(0)})}, *bad.violation) <= 0);
  // generic level: only finitely many integral coroots, rank deficient
  AdmissibilityResult generic = is_admissible(rs, {Rational(1, 3), Weight::from_fundamental({Rational(1, 7), Rational(0)})});
  CHECK_FALSE(generic.full_rank);
  CHECK_THROWS_AS(is_admissible(rs, {Rational(-3), Weight::zero(2)}), std::domain_error);
}
