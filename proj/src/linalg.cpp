#include "blvoa/linalg.hpp"

namespace blvoa {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sgn(a) == 0) return;
  for (const auto& [col, value] : x) {
    auto it = y.find(col);
    if (it == y.end()) {
      y.emplace(col, a * value);
    } else {
      it->second += a * value;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  for (const auto& [pivot, row] : rows_) {
    auto it = v.find(pivot);
    if (it == v.end()) continue;
    Rational factor = -it->second;
    axpy(v, factor, row);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  const std::size_t pivot = v.begin()->first;
  const Rational lead = v.begin()->second;
  for (auto& [col, value] : v) value /= lead;
  for (auto& [other_pivot, row] : rows_) {
    auto it = row.find(pivot);
    if (it == row.end()) continue;
    Rational factor = -it->second;
    axpy(row, factor, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::size_t rank_of(const std::vector<std::vector<Rational>>& rows) {
  EchelonBasis basis;
  for (const auto& row : rows) {
    SparseVector v;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (sgn(row[j]) != 0) v.emplace(j, row[j]);
    basis.insert(std::move(v));
  }
  return basis.rank();
}

}  // namespace blvoa
