#pragma once

// Highest weights of irreducible modules at level n - l + 1/2.

#include "blvoa/admissible.hpp"
#include "blvoa/liealg.hpp"
#include "blvoa/rootsys.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace blvoa {

/// Common zeros of explicit p_1, ..., p_l by back-substitution from h_l.
std::vector<Weight> solve_triangular(const LieAlgebra& g, unsigned n);

/// S ⊆ {1, ..., l-1}, 1-based.
Weight mu_S(const std::set<std::size_t>& S, std::size_t l);
Weight mu_S_prime(const std::set<std::size_t>& S, std::size_t l);

struct ClassificationEntry {
  Weight mu;
  std::vector<std::string> tags;
  std::optional<std::string> s_label;  // "S={1,2}" or "S'={1}"
  std::optional<AdmissibilityResult> admissibility;
};

struct ClassificationResult {
  std::size_t rank = 0;
  unsigned n = 0;
  Rational level;
  std::string status;  // "complete" or "candidate"
  bool oracle_filtered = false;
  std::vector<ClassificationEntry> entries;
};

struct ClassifyOptions {
  /// For n > 1, also require vanishing of the oracle P_0 basis when dim V(2n e_1) is under the ceiling.
  bool use_oracle = true;
  std::size_t oracle_ceiling = 2000;
  std::size_t term_guard = 5'000'000;
};

ClassificationResult classify_category_O(std::size_t l, unsigned n, const ClassifyOptions& opts = {});
ClassificationResult classify_finite_dim(std::size_t l, unsigned n);

/// Attaches admissibility certificates for kΛ_0 + μ to every entry.
ClassificationResult certify(ClassificationResult result, unsigned m_max_override = 0);

bool all_admissible(const ClassificationResult& result);

}  // namespace blvoa
