#pragma once

// Oracle for P_0: the adjoint submodule R of U(g) generated by v_n', its
// zero-weight space R_0, and the eigenvalue polynomials of R_0 on highest-weight vectors.

#include "blvoa/cartan_poly.hpp"
#include "blvoa/uea.hpp"

#include <map>
#include <string>
#include <vector>

namespace blvoa {

struct AdModule {
  std::size_t rank = 0;
  unsigned n = 0;
  UEAElement highest;
  /// Linearly independent elements, grouped by ad-h weight.
  std::map<Root, std::vector<UEAElement>> spaces;

  std::size_t dimension() const;
  const std::vector<UEAElement>& zero_space() const;
};

/// v_n' = (-1/4 e_{e1}^2 + sum_j e_{e1-ej} e_{e1+ej})^n, obtained as the image of the singular vector.
UEAElement zhu_singular_image(const EnvelopingAlgebra& U, unsigned n);

/// Saturates v_n' under ad e_i, ad f_i. Throws GuardExceeded when dim V(2n e_1) exceeds the ceiling
/// and InconsistencyError when the span outgrows that dimension.
AdModule generate_module(const EnvelopingAlgebra& U, unsigned n, std::size_t ceiling = 2000);

/// Canonical basis of span{p_r : r in R_0}.
std::vector<CartanPolynomial> p0_basis(const EnvelopingAlgebra& U, const AdModule& R);

CartanPolynomial explicit_p(const LieAlgebra& g, std::size_t i, unsigned n);
CartanPolynomial explicit_q(const LieAlgebra& g, unsigned n);

struct P0Comparison {
  std::size_t dim_R = 0;
  std::size_t dim_R0 = 0;
  std::size_t oracle_dim = 0;
  std::size_t explicit_dim = 0;  // span of p_1..p_l
  std::vector<std::pair<std::string, bool>> membership;  // p_i, q in the oracle span
  bool all_members = false;
  bool q_in_p_span = false;
  bool spans_equal = false;  // oracle span == span{p_1..p_l}
  bool spans_equal_with_q = false;  // oracle span == span{p_1..p_l, q}
  std::vector<CartanPolynomial> oracle_basis;
};

P0Comparison compare_p0(const EnvelopingAlgebra& U, unsigned n, std::size_t ceiling = 2000);

}  // namespace blvoa
