#pragma once

// PBW normal-form arithmetic in U(g).
//
// Monomials are nondecreasing words in the basis order of LieAlgebra
// (f-block, then h-block, then e-block). A monomial lies in U(g)n_+ exactly
// when its e-block is nonempty.

#include "blvoa/cartan_poly.hpp"
#include "blvoa/liealg.hpp"
#include "blvoa/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace blvoa {

/// PBW monomial: basis indices in nondecreasing order.
struct Monomial {
  std::vector<std::uint8_t> letters;

  bool empty() const { return letters.empty(); }
  std::size_t degree() const { return letters.size(); }
  /// (basis index, power) pairs with strictly increasing index.
  std::vector<std::pair<std::size_t, unsigned>> factors() const;
  auto operator<=>(const Monomial&) const = default;
};

/// Finite linear combination of PBW monomials; zero coefficients are never stored.
class UEAElement {
 public:
  UEAElement() = default;

  static UEAElement scalar(const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const Rational& c);
  UEAElement& operator+=(const UEAElement& o);
  UEAElement& axpy(const Rational& a, const UEAElement& o);
  UEAElement operator+(const UEAElement& o) const;
  UEAElement operator-(const UEAElement& o) const;
  UEAElement operator*(const Rational& s) const;
  bool operator==(const UEAElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<Monomial, Rational> terms_;
};

/// Result of grading an element by ad-h weight.
struct GradedWeight {
  bool mixed = false;
  Root weight;
};

class EnvelopingAlgebra {
 public:
  static constexpr std::size_t kDefaultGuard = 5'000'000;

  explicit EnvelopingAlgebra(std::shared_ptr<const LieAlgebra> g, std::size_t term_guard = kDefaultGuard);
  explicit EnvelopingAlgebra(std::size_t rank, std::size_t term_guard = kDefaultGuard);

  const LieAlgebra& lie() const { return *g_; }
  std::shared_ptr<const LieAlgebra> lie_ptr() const { return g_; }
  std::size_t term_guard() const { return guard_; }

  UEAElement one() const { return UEAElement::scalar(1); }
  UEAElement generator(std::size_t idx) const;
  UEAElement e(const Root& alpha) const { return generator(g_->e_index(alpha)); }
  UEAElement f(const Root& alpha) const { return generator(g_->f_index(alpha)); }
  UEAElement h(std::size_t i) const { return generator(g_->h_index(i)); }

  UEAElement multiply(const UEAElement& a, const UEAElement& b) const;
  UEAElement power(const UEAElement& a, unsigned n) const;
  /// Normal form of an arbitrary word x_1 x_2 ... x_r of basis indices.
  UEAElement word(const std::vector<std::size_t>& letters) const;

  /// [x, y].
  UEAElement ad(const UEAElement& x, const UEAElement& y) const;
  /// (ad x)^n y for a basis element x.
  UEAElement ad_power(std::size_t x, unsigned n, const UEAElement& y) const;
  /// (x_1 x_2 ... x_r)_L y = ad x_1 (ad x_2 ( ... ad x_r y)).
  UEAElement ad_word(const std::vector<std::size_t>& letters, const UEAElement& y) const;
  /// (ad x)^n (Y_1 ... Y_m) through the multinomial expansion over the factors.
  UEAElement ad_power_multinomial(std::size_t x, unsigned n, const std::vector<UEAElement>& factors) const;

  /// Drops every monomial with a nonempty e-block.
  UEAElement reduce_mod_nplus(const UEAElement& r) const;
  GradedWeight weight_of(const UEAElement& r) const;
  Root monomial_weight(const Monomial& m) const;
  /// Eigenvalue polynomial on a highest-weight vector; input must have weight zero.
  CartanPolynomial hw_polynomial(const UEAElement& r) const;
  /// Embeds S(h) into U(g).
  UEAElement from_cartan(const CartanPolynomial& p) const;

  std::string to_string(const UEAElement& r) const;

  std::size_t cache_size() const;

 private:
  UEAElement mul_monomial_generator(const Monomial& m, std::size_t g) const;
  UEAElement mul_element_generator(const UEAElement& a, std::size_t g) const;
  void check_guard(const UEAElement& r) const;

  std::shared_ptr<const LieAlgebra> g_;
  std::size_t guard_;

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uint8_t>& k) const noexcept;
  };
  mutable std::shared_mutex cache_mutex_;
  mutable std::unordered_map<std::vector<std::uint8_t>, UEAElement, KeyHash> cache_;
};

}  // namespace blvoa
