#pragma once

// so(2l+1) realized as matrices preserving the antidiagonal symmetric form, so
// that the Cartan subalgebra is diagonal.

#include "blvoa/rational.hpp"
#include "blvoa/rootsys.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace blvoa {

/// Dense square matrix with exact entries.
class MatrixElement {
 public:
  MatrixElement() = default;
  explicit MatrixElement(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  MatrixElement operator+(const MatrixElement& o) const;
  MatrixElement operator-(const MatrixElement& o) const;
  MatrixElement operator*(const MatrixElement& o) const;
  MatrixElement operator*(const Rational& s) const;
  MatrixElement transpose() const;
  bool operator==(const MatrixElement& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool is_zero() const;
  Rational trace() const;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

MatrixElement commutator(const MatrixElement& x, const MatrixElement& y);

/// Tag of a basis vector of g.
struct BasisElement {
  enum class Kind { F, H, E };
  Kind kind;
  /// Positive-root index for E/F, 1-based coroot index for H.
  std::size_t index;
  bool operator==(const BasisElement&) const = default;
};

/// Sparse linear combination of basis indices.
using BasisCombination = std::vector<std::pair<std::size_t, Rational>>;

class LieAlgebra {
 public:
  explicit LieAlgebra(std::size_t rank);

  const RootSystem& roots() const { return roots_; }
  std::size_t rank() const { return roots_.rank(); }
  /// 2l^2 + l.
  std::size_t dim() const { return basis_.size(); }
  std::size_t num_positive() const { return roots_.positive_roots().size(); }

  // PBW basis order: f's (positive-root order), then h_1..h_l, then e's.
  std::size_t f_index(const Root& alpha) const;
  std::size_t e_index(const Root& alpha) const;
  std::size_t h_index(std::size_t i) const;
  bool is_f(std::size_t idx) const { return idx < num_positive(); }
  bool is_h(std::size_t idx) const { return idx >= num_positive() && idx < num_positive() + rank(); }
  bool is_e(std::size_t idx) const { return idx >= num_positive() + rank(); }

  const BasisElement& tag(std::size_t idx) const { return basis_.at(idx); }
  const MatrixElement& matrix(std::size_t idx) const { return matrices_.at(idx); }
  /// ad-h weight of a basis element in epsilon coordinates (zero for h's).
  const Root& weight(std::size_t idx) const { return weights_.at(idx); }
  std::string label(std::size_t idx) const;

  /// (e_i, f_i, h_i) for i = 1..l as basis indices.
  struct Chevalley {
    std::size_t e, f, h;
  };
  std::vector<Chevalley> chevalley_generators() const;

  /// Root vector built by the nested-bracket construction.
  std::size_t root_vector(const Root& alpha, bool raising) const;

  /// [x, y] expanded in the basis (structure constants).
  const BasisCombination& bracket(std::size_t x, std::size_t y) const { return brackets_[x * dim() + y]; }
  /// Normalized invariant form with (theta, theta) = 2.
  const Rational& form(std::size_t x, std::size_t y) const { return forms_[x * dim() + y]; }
  Rational invariant_form(const MatrixElement& x, const MatrixElement& y) const;

  /// Coefficients of h_alpha = [e_alpha, f_alpha] in h_1..h_l.
  std::vector<Rational> h_of_root(const Root& alpha) const;

  /// Expands a matrix in the basis; throws std::invalid_argument if it is not in g.
  BasisCombination decompose(const MatrixElement& m) const;
  MatrixElement compose(const BasisCombination& c) const;

 private:
  std::size_t matrix_pos(int signed_eps) const;
  MatrixElement cartan_matrix_of(const Root& coroot_eps) const;

  RootSystem roots_;
  std::size_t n_;
  std::vector<BasisElement> basis_;
  std::vector<MatrixElement> matrices_;
  std::vector<Root> weights_;
  std::vector<BasisCombination> brackets_;
  std::vector<Rational> forms_;
  Rational form_scale_;
};

}  // namespace blvoa
