#pragma once

// Admissibility of affine weights kΛ_0 + μ over B_l^(1).

#include "blvoa/rational.hpp"
#include "blvoa/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blvoa {

struct AffineWeight {
  Rational level;
  Weight finite;
};

/// α + mδ.
struct AffineRealRoot {
  Root alpha;
  int mode = 0;

  bool is_positive() const;
  /// (2α/(α,α) in ε-coordinates, 2m/(α,α)).
  std::vector<Rational> coroot() const;
  /// "α_2∨", "(δ−ε_1)∨", "(2δ+ε_1−ε_2)∨".
  std::string label(const RootSystem& rs) const;
  bool operator==(const AffineRealRoot&) const = default;
};

/// ⟨λ+ρ, (α+mδ)∨⟩ = 2/(α,α) (m(k+h∨) + (ρ̄+μ, α)).
Rational shifted_pairing(const RootSystem& rs, const AffineWeight& lambda, const AffineRealRoot& r);

struct AdmissibilityResult {
  bool admissible = false;
  bool regular = false;    // no pairing in -Z_+
  bool full_rank = false;  // integral coroots span l+1 dimensions
  unsigned m_max = 0;          // window for the -Z_+ condition
  unsigned coroot_window = 0;  // central-coefficient window for integral coroots
  std::optional<AffineRealRoot> violation;
  std::vector<AffineRealRoot> simple_coroots;
  std::size_t integral_count = 0;
};

/// Requires k + h∨ > 0. A positive m_max_override replaces the derived window.
AdmissibilityResult is_admissible(const RootSystem& rs, const AffineWeight& lambda, unsigned m_max_override = 0);

std::string format_coroot_set(const RootSystem& rs, const std::vector<AffineRealRoot>& roots);

}  // namespace blvoa
