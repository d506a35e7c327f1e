#pragma once

#include "blvoa/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace blvoa {

/// Sparse vector over Q keyed by column index. Zero entries are never stored.
using SparseVector = std::map<std::size_t, Rational>;

/// Incrementally maintained reduced row-echelon basis of a subspace of Q^N.
///
/// Pivots are the smallest column of each row and every pivot column is cleared
/// from all other rows, so two bases of the same subspace end up with identical
/// rows regardless of insertion order.
class EchelonBasis {
 public:
  /// Adds v to the span. Returns false when v was already in it.
  bool insert(SparseVector v);

  /// Residual of v after elimination against the current rows (zero iff v is in the span).
  SparseVector reduce(SparseVector v) const;

  bool contains(const SparseVector& v) const { return reduce(v).empty(); }

  std::size_t rank() const { return rows_.size(); }

  /// Rows keyed by pivot column, each normalized to 1 at the pivot.
  const std::map<std::size_t, SparseVector>& rows() const { return rows_; }

  bool same_span(const EchelonBasis& other) const { return rows_ == other.rows_; }

 private:
  std::map<std::size_t, SparseVector> rows_;
};

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);

/// Rank of a dense matrix given as a list of rows.
std::size_t rank_of(const std::vector<std::vector<Rational>>& rows);

}  // namespace blvoa
