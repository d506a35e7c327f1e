#pragma once

// Affinization of g, the generalized Verma module N(k,0) on a vacuum vector,
// and the singular vector v_n at level n - l + 1/2.

#include "blvoa/liealg.hpp"
#include "blvoa/rational.hpp"
#include "blvoa/uea.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace blvoa {

/// x(m) = x ⊗ t^m, or the central element c.
struct AffineGenerator {
  bool central = false;
  std::size_t base = 0;
  int mode = 0;

  static AffineGenerator loop(std::size_t base, int mode) { return {false, base, mode}; }
  static AffineGenerator c() { return {true, 0, 0}; }
};

/// Result of [x(m), y(n)] = [x,y](m+n) + m δ_{m+n,0} (x,y) c.
struct AffineBracket {
  BasisCombination loop_part;
  int mode = 0;
  Rational central = 0;
};

AffineBracket affine_bracket(const LieAlgebra& g, const AffineGenerator& x, const AffineGenerator& y);

/// Creation operator x(mode) with mode < 0.
struct CreationOp {
  int mode;
  std::uint8_t index;
  auto operator<=>(const CreationOp&) const = default;
};

/// Creation operators ordered by (mode ascending, basis index), applied to the vacuum.
using CreationMonomial = std::vector<CreationOp>;

class VermaVector {
 public:
  VermaVector() = default;
  static VermaVector vacuum() {
    VermaVector v;
    v.terms_[{}] = 1;
    return v;
  }

  const std::map<CreationMonomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const CreationMonomial& m, const Rational& c);
  VermaVector& axpy(const Rational& a, const VermaVector& o);
  VermaVector operator+(const VermaVector& o) const;
  VermaVector operator-(const VermaVector& o) const;
  VermaVector operator*(const Rational& s) const;
  bool operator==(const VermaVector& o) const { return terms_ == o.terms_; }

 private:
  std::map<CreationMonomial, Rational> terms_;
};

/// ĥ-weight of a homogeneous vector: finite part and δ-coefficient (sum of modes).
struct VermaWeight {
  bool mixed = false;
  Root finite;
  int delta = 0;
};

/// N(k,0) at a fixed level k.
class VermaModule {
 public:
  VermaModule(std::shared_ptr<const LieAlgebra> g, const Rational& level,
              std::size_t term_guard = EnvelopingAlgebra::kDefaultGuard);

  const LieAlgebra& lie() const { return *g_; }
  const Rational& level() const { return level_; }

  VermaVector apply(const AffineGenerator& x, const VermaVector& v) const;
  /// word[0] (word[1] ( ... word.back() v)).
  VermaVector apply_word(const std::vector<AffineGenerator>& word, const VermaVector& v) const;

  VermaWeight weight_of(const VermaVector& v) const;
  std::string to_string(const VermaVector& v) const;

 private:
  VermaVector apply_loop(std::size_t x, int m, const CreationMonomial& mono, std::size_t start) const;
  void check_guard(const VermaVector& v) const;

  std::shared_ptr<const LieAlgebra> g_;
  Rational level_;
  std::size_t guard_;

  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::string, VermaVector> cache_;
};

/// (-1/4 e_{e1}(-1)^2 + sum_j e_{e1-ej}(-1) e_{e1+ej}(-1))^n 1.
VermaVector build_singular_candidate(const VermaModule& N, unsigned n);

struct SingularReport {
  bool singular = false;
  Rational level;
  VermaVector vector;
  /// (operator label, residual) for e_1(0), ..., e_l(0), f_θ(1).
  std::vector<std::pair<std::string, VermaVector>> residuals;
  std::size_t residual_terms() const;
};

/// Checks e_i(0) v_n = 0 and f_θ(1) v_n = 0 at the given level (default n - l + 1/2).
SingularReport check_singular(std::size_t l, unsigned n, std::optional<Rational> level = std::nullopt,
                              std::size_t term_guard = EnvelopingAlgebra::kDefaultGuard);

/// Image in U(g): x_1(-n_1-1)...x_m(-n_m-1)1 -> (-1)^{n_1+...+n_m} x_m ... x_1.
UEAElement fz_image(const EnvelopingAlgebra& U, const VermaVector& v);

/// n - l + 1/2.
Rational critical_level(std::size_t l, unsigned n);

}  // namespace blvoa
