#pragma once

// Root system of type B_l in the orthonormal epsilon basis, with the form
// normalized so that the highest root has squared length 2.

#include "blvoa/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace blvoa {

/// Integral vector in epsilon coordinates; used for roots and root-lattice elements.
struct Root {
  std::vector<int> coords;

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;
  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;
  auto operator<=>(const Root&) const = default;

  /// Unit vector epsilon_i (1-based).
  static Root epsilon(std::size_t rank, std::size_t i);
  /// "e1-e2", "e1", "e1+e3", "-e2" ...
  std::string label() const;
};

/// Weight of B_l stored in epsilon coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<Rational> eps) : eps_(std::move(eps)) {}
  explicit Weight(const Root& root);

  static Weight zero(std::size_t rank) { return Weight(std::vector<Rational>(rank)); }
  /// mu = sum_i c_i omega_i.
  static Weight from_fundamental(const std::vector<Rational>& coords);
  static Weight fundamental(std::size_t rank, std::size_t i);

  std::size_t rank() const { return eps_.size(); }
  const std::vector<Rational>& eps() const { return eps_; }
  /// Values mu(h_1), ..., mu(h_l).
  std::vector<Rational> fundamental_coords() const;
  bool is_zero() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator*(const Rational& s) const;
  bool operator==(const Weight& other) const { return eps_ == other.eps_; }
  bool operator<(const Weight& other) const { return eps_ < other.eps_; }

  /// "a*w1 + b*w2" style rendering.
  std::string to_fundamental_string() const;
  std::string to_eps_string() const;

 private:
  std::vector<Rational> eps_;
};

Weight operator*(const Rational& s, const Weight& w);

Rational inner(const Weight& a, const Weight& b);
Rational inner(const Root& a, const Root& b);
Rational inner(const Weight& a, const Root& b);

/// 2 (mu, alpha) / (alpha, alpha).
Rational coroot_pairing(const Weight& mu, const Root& alpha);

class RootSystem {
 public:
  explicit RootSystem(std::size_t rank);

  std::size_t rank() const { return rank_; }
  /// Positive roots in ascending lexicographic order of epsilon coordinates.
  const std::vector<Root>& positive_roots() const { return positive_; }
  /// All roots: positives followed by their negatives.
  std::vector<Root> all_roots() const;
  /// alpha_1, ..., alpha_l (index 0-based in the vector).
  const std::vector<Root>& simple_roots() const { return simple_; }
  const Root& simple_root(std::size_t i) const { return simple_.at(i - 1); }
  const Root& highest_root() const { return theta_; }
  /// Sum of the fundamental weights.
  const Weight& rho() const { return rho_; }
  /// 2l - 1.
  int dual_coxeter() const { return static_cast<int>(2 * rank_) - 1; }

  std::optional<std::size_t> positive_index(const Root& root) const;
  bool is_root(const Root& root) const;
  /// Coefficients of a root-lattice element in the simple roots.
  std::vector<int> simple_root_coeffs(const Root& root) const;
  /// Cartan matrix A_ij = alpha_j(h_i).
  std::vector<std::vector<int>> cartan_matrix() const;

  bool is_dominant_integral(const Weight& mu) const;
  /// Weyl's dimension formula. Throws std::invalid_argument on a non-dominant weight.
  Integer weyl_dim(const Weight& mu) const;

 private:
  void check_rank(const Weight& mu) const;

  std::size_t rank_;
  std::vector<Root> positive_;
  std::vector<Root> simple_;
  Root theta_;
  Weight rho_;
};

}  // namespace blvoa
