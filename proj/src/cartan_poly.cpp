#include "blvoa/cartan_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blvoa {

CartanPolynomial CartanPolynomial::constant(std::size_t rank, const Rational& c) {
  CartanPolynomial p(rank);
  p.add_term(Exponents(rank, 0), c);
  return p;
}

CartanPolynomial CartanPolynomial::variable(std::size_t rank, std::size_t i) {
  if (i < 1 || i > rank) throw std::invalid_argument("variable index out of range");
  CartanPolynomial p(rank);
  Exponents e(rank, 0);
  e[i - 1] = 1;
  p.add_term(e, 1);
  return p;
}

CartanPolynomial CartanPolynomial::linear(const std::vector<Rational>& coeffs, const Rational& c) {
  const std::size_t rank = coeffs.size();
  CartanPolynomial p = constant(rank, c);
  for (std::size_t i = 0; i < rank; ++i) p += variable(rank, i + 1) * coeffs[i];
  return p;
}

unsigned CartanPolynomial::degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0u));
  return d;
}

void CartanPolynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != rank_) throw std::invalid_argument("exponent rank mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CartanPolynomial& CartanPolynomial::operator+=(const CartanPolynomial& o) {
  if (o.rank_ != rank_) throw std::invalid_argument("polynomial rank mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CartanPolynomial CartanPolynomial::operator+(const CartanPolynomial& o) const {
  CartanPolynomial out = *this;
  out += o;
  return out;
}

CartanPolynomial CartanPolynomial::operator-(const CartanPolynomial& o) const { return *this + o * Rational(-1); }

CartanPolynomial CartanPolynomial::operator*(const Rational& s) const {
  CartanPolynomial out(rank_);
  if (sgn(s) == 0) return out;
  out.terms_ = terms_;
  for (auto& [e, c] : out.terms_) c *= s;
  return out;
}

CartanPolynomial CartanPolynomial::operator*(const CartanPolynomial& o) const {
  if (o.rank_ != rank_) throw std::invalid_argument("polynomial rank mismatch");
  CartanPolynomial out(rank_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(rank_);
      for (std::size_t i = 0; i < rank_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Rational CartanPolynomial::evaluate(const std::vector<Rational>& h_values) const {
  if (h_values.size() != rank_) throw std::invalid_argument("evaluate: rank mismatch");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < rank_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= h_values[i];
    total += term;
  }
  return total;
}

CartanPolynomial CartanPolynomial::shifted(const std::vector<Rational>& s) const {
  if (s.size() != rank_) throw std::invalid_argument("shifted: rank mismatch");
  std::vector<CartanPolynomial> lin;
  for (std::size_t i = 0; i < rank_; ++i) lin.push_back(variable(rank_, i + 1) - constant(rank_, s[i]));
  CartanPolynomial out(rank_);
  for (const auto& [e, c] : terms_) {
    CartanPolynomial term = constant(rank_, c);
    for (std::size_t i = 0; i < rank_; ++i)
      for (unsigned k = 0; k < e[i]; ++k) term = term * lin[i];
    out += term;
  }
  return out;
}

std::string CartanPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  std::vector<std::pair<Exponents, Rational>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = std::accumulate(a.first.begin(), a.first.end(), 0u);
    unsigned db = std::accumulate(b.first.begin(), b.first.end(), 0u);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [e, c] : sorted) {
    bool is_const = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
    Rational a = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (a != 1 || is_const) {
      os << to_display_string(a);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << '*';
      os << 'h' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
  }
  return os.str();
}

CartanPolynomial falling_product(const CartanPolynomial& p, const Rational& start, unsigned count) {
  CartanPolynomial out = CartanPolynomial::constant(p.rank(), 1);
  for (unsigned j = 0; j < count; ++j) out = out * (p - CartanPolynomial::constant(p.rank(), start + j));
  return out;
}

SparseVector PolynomialSpan::coordinates(const CartanPolynomial& p, bool allow_new) {
  SparseVector v;
  for (const auto& [e, c] : p.terms()) {
    auto it = index_.find(e);
    if (it == index_.end()) {
      if (!allow_new) return {};
      it = index_.emplace(e, monomials_.size()).first;
      monomials_.push_back(e);
    }
    v.emplace(it->second, c);
  }
  return v;
}

bool PolynomialSpan::insert(const CartanPolynomial& p) {
  if (p.rank() != rank_) throw std::invalid_argument("PolynomialSpan: rank mismatch");
  return basis_.insert(coordinates(p, true));
}

bool PolynomialSpan::contains(const CartanPolynomial& p) const {
  if (p.rank() != rank_) throw std::invalid_argument("PolynomialSpan: rank mismatch");
  SparseVector v;
  for (const auto& [e, c] : p.terms()) {
    auto it = index_.find(e);
    if (it == index_.end()) return false;
    v.emplace(it->second, c);
  }
  return basis_.contains(v);
}

bool PolynomialSpan::same_span(const PolynomialSpan& other) const {
  if (dimension() != other.dimension()) return false;
  for (const auto& p : other.basis())
    if (!contains(p)) return false;
  return true;
}

std::vector<CartanPolynomial> PolynomialSpan::basis() const {
  // Re-eliminate with columns in graded order so the result does not depend on
  // the order in which monomials were first seen.
  std::vector<CartanPolynomial::Exponents> order = monomials_;
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  });
  std::map<CartanPolynomial::Exponents, std::size_t> column;
  for (std::size_t k = 0; k < order.size(); ++k) column[order[k]] = k;
  EchelonBasis canonical;
  for (const auto& [pivot, row] : basis_.rows()) {
    SparseVector v;
    for (const auto& [col, c] : row) v.emplace(column.at(monomials_[col]), c);
    canonical.insert(std::move(v));
  }
  std::vector<CartanPolynomial> out;
  for (const auto& [pivot, row] : canonical.rows()) {
    CartanPolynomial p(rank_);
    for (const auto& [col, c] : row) p.add_term(order[col], c);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace blvoa
