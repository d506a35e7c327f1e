#pragma once

// Finite checks of the adjoint-action identities used to produce P_0 members.
// Claims stated modulo a left ideal U(g)e_alpha are checked modulo U(g)n_+.

#include "blvoa/uea.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blvoa {

struct IdentityParams {
  std::optional<Root> alpha;  // ids 1, 2, 6, 10
  std::size_t i = 2;          // root index in e1 +- e_i
  unsigned k = 0;
  unsigned m = 0;
  unsigned j = 1;  // id 4
  unsigned r = 1;  // id 5
  std::optional<CartanPolynomial> p;  // id 6; defaults to a fixed cubic
};

struct IdentityOutcome {
  std::string name;    // "1".."12", "commuting", "multinomial"
  std::string params;  // human-readable parameter summary
  bool skipped = false;
  bool holds = false;
};

/// Checks one of the twelve numbered identities. Side conditions i >= 3 are reported as skipped when l = 2.
IdentityOutcome check_identity(const EnvelopingAlgebra& U, int id, const IdentityParams& params);

/// Y1 = e_{b1}...e_{bk}, Y2 = f_{g1}...f_{gm} with commuting factors and equal root sums.
IdentityOutcome check_commuting_monomials(const EnvelopingAlgebra& U, const std::vector<Root>& betas,
                                          const std::vector<Root>& gammas);

/// (ad x)^n (Y_1 ... Y_m) computed directly and by the multinomial expansion.
IdentityOutcome check_multinomial(const EnvelopingAlgebra& U, std::size_t x, unsigned n,
                                  const std::vector<UEAElement>& factors, const std::string& label);

/// Full sweep at rank l with parameters m, k (and j, r) up to max_param.
std::vector<IdentityOutcome> run_identity_suite(const EnvelopingAlgebra& U, unsigned max_param = 3);

}  // namespace blvoa
