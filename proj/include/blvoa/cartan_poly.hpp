#pragma once

#include "blvoa/linalg.hpp"
#include "blvoa/rational.hpp"
#include "blvoa/rootsys.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace blvoa {

/// Polynomial in the commuting variables h_1, ..., h_l with rational coefficients.
/// Evaluating at a weight substitutes h_i -> mu(h_i).
class CartanPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  CartanPolynomial() = default;
  explicit CartanPolynomial(std::size_t rank) : rank_(rank) {}

  static CartanPolynomial constant(std::size_t rank, const Rational& c);
  static CartanPolynomial variable(std::size_t rank, std::size_t i);
  /// sum_i coeffs[i] h_{i+1} + c.
  static CartanPolynomial linear(const std::vector<Rational>& coeffs, const Rational& c = 0);

  std::size_t rank() const { return rank_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;

  void add_term(const Exponents& e, const Rational& c);

  CartanPolynomial operator+(const CartanPolynomial& o) const;
  CartanPolynomial operator-(const CartanPolynomial& o) const;
  CartanPolynomial operator*(const CartanPolynomial& o) const;
  CartanPolynomial operator*(const Rational& s) const;
  CartanPolynomial& operator+=(const CartanPolynomial& o);
  bool operator==(const CartanPolynomial& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

  Rational evaluate(const std::vector<Rational>& h_values) const;
  Rational evaluate(const Weight& mu) const { return evaluate(mu.fundamental_coords()); }

  /// p(h_1 - s_1, ..., h_l - s_l).
  CartanPolynomial shifted(const std::vector<Rational>& s) const;

  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::map<Exponents, Rational> terms_;
};

/// prod_{j=0}^{count-1} (p - (start + j)), with p usually linear. Empty product is 1.
CartanPolynomial falling_product(const CartanPolynomial& p, const Rational& start, unsigned count);

/// Linear span of polynomials, kept in canonical reduced echelon form.
class PolynomialSpan {
 public:
  explicit PolynomialSpan(std::size_t rank) : rank_(rank) {}

  bool insert(const CartanPolynomial& p);
  bool contains(const CartanPolynomial& p) const;
  std::size_t dimension() const { return basis_.rank(); }
  bool same_span(const PolynomialSpan& other) const;
  /// Canonical basis polynomials.
  std::vector<CartanPolynomial> basis() const;

 private:
  SparseVector coordinates(const CartanPolynomial& p, bool allow_new);

  std::size_t rank_;
  std::map<CartanPolynomial::Exponents, std::size_t> index_;
  std::vector<CartanPolynomial::Exponents> monomials_;
  EchelonBasis basis_;
};

}  // namespace blvoa
