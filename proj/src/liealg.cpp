#include "blvoa/liealg.hpp"

#include <algorithm>
#include <stdexcept>

namespace blvoa {

MatrixElement MatrixElement::operator+(const MatrixElement& o) const {
  MatrixElement out = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
  return out;
}

MatrixElement MatrixElement::operator-(const MatrixElement& o) const {
  MatrixElement out = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] -= o.a_[k];
  return out;
}

MatrixElement MatrixElement::operator*(const MatrixElement& o) const {
  MatrixElement out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const Rational& lhs = (*this)(i, k);
      if (sgn(lhs) == 0) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(o(k, j)) != 0) out(i, j) += lhs * o(k, j);
    }
  return out;
}

MatrixElement MatrixElement::operator*(const Rational& s) const {
  MatrixElement out = *this;
  for (auto& x : out.a_) x *= s;
  return out;
}

MatrixElement MatrixElement::transpose() const {
  MatrixElement out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool MatrixElement::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

Rational MatrixElement::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

MatrixElement commutator(const MatrixElement& x, const MatrixElement& y) { return x * y - y * x; }

std::size_t LieAlgebra::matrix_pos(int signed_eps) const {
  const int l = static_cast<int>(rank());
  if (signed_eps > 0) return static_cast<std::size_t>(signed_eps - 1);
  if (signed_eps == 0) return static_cast<std::size_t>(l);
  return n_ + static_cast<std::size_t>(signed_eps);
}

MatrixElement LieAlgebra::cartan_matrix_of(const Root& coroot_eps) const {
  MatrixElement h(n_);
  for (std::size_t j = 1; j <= rank(); ++j) {
    h(matrix_pos(static_cast<int>(j)), matrix_pos(static_cast<int>(j))) = coroot_eps.coords[j - 1];
    h(matrix_pos(-static_cast<int>(j)), matrix_pos(-static_cast<int>(j))) = -coroot_eps.coords[j - 1];
  }
  return h;
}

LieAlgebra::LieAlgebra(std::size_t rank) : roots_(rank), n_(2 * rank + 1) {
  const std::size_t l = rank;
  const int li = static_cast<int>(l);

  // Chevalley generators. e_i = E_{a,b} - E_{b',a'} preserves the antidiagonal form.
  auto unit_pair = [&](int a_eps, int b_eps) {
    MatrixElement m(n_);
    std::size_t a = matrix_pos(a_eps), b = matrix_pos(b_eps);
    m(a, b) += 1;
    m(n_ - 1 - b, n_ - 1 - a) -= 1;
    return m;
  };
  std::vector<MatrixElement> ce(l + 1), cf(l + 1), ch(l + 1);
  for (int i = 1; i <= li; ++i) {
    const Root& alpha = roots_.simple_root(static_cast<std::size_t>(i));
    Root coroot = alpha;
    if (inner(alpha, alpha) == 1)
      for (int& c : coroot.coords) c *= 2;
    ce[i] = i < li ? unit_pair(i, i + 1) : unit_pair(li, 0);
    ch[i] = cartan_matrix_of(coroot);
    MatrixElement raw = ce[i].transpose();
    MatrixElement br = commutator(ce[i], raw);
    std::size_t p = matrix_pos(i);
    Rational s = ch[i](p, p) / br(p, p);
    cf[i] = raw * s;
    if (!(commutator(ce[i], cf[i]) == ch[i])) throw InconsistencyError("Chevalley normalization failed");
  }

  // Nested brackets for the remaining root vectors.
  auto e_minus = [&](int i, int j) {  // e_{e_i - e_j}, i < j
    MatrixElement m = ce[j - 1];
    for (int s = j - 2; s >= i; --s) m = commutator(ce[s], m);
    return m;
  };
  auto e_short = [&](int i) {  // e_{e_i}
    MatrixElement m = ce[li];
    for (int s = li - 1; s >= i; --s) m = commutator(ce[s], m);
    return m;
  };
  auto f_chain = [&](int i, int top) {  // [f_top, [f_{top-1}, ... [f_{i+1}, f_i]]]
    MatrixElement m = cf[i];
    for (int s = i + 1; s <= top; ++s) m = commutator(cf[s], m);
    return m;
  };
  const Rational half(1, 2);

  const auto& pos = roots_.positive_roots();
  std::vector<MatrixElement> e_mats(pos.size()), f_mats(pos.size());
  for (std::size_t r = 0; r < pos.size(); ++r) {
    const Root& alpha = pos[r];
    std::vector<int> plus, minus;
    for (int k = 0; k < li; ++k) {
      if (alpha.coords[k] > 0) plus.push_back(k + 1);
      if (alpha.coords[k] < 0) minus.push_back(k + 1);
    }
    if (plus.size() == 1 && minus.empty()) {
      e_mats[r] = e_short(plus[0]);
      f_mats[r] = f_chain(plus[0], li);
    } else if (plus.size() == 1 && minus.size() == 1) {
      e_mats[r] = e_minus(plus[0], minus[0]);
      f_mats[r] = f_chain(plus[0], minus[0] - 1);
    } else {
      int i = plus[0], j = plus[1];
      e_mats[r] = commutator(e_short(i), e_short(j)) * half;
      f_mats[r] = commutator(f_chain(j, li), f_chain(i, li)) * half;
    }
  }

  for (std::size_t r = 0; r < pos.size(); ++r) {
    basis_.push_back({BasisElement::Kind::F, r});
    matrices_.push_back(f_mats[r]);
    weights_.push_back(-pos[r]);
  }
  for (std::size_t i = 1; i <= l; ++i) {
    basis_.push_back({BasisElement::Kind::H, i});
    matrices_.push_back(ch[i]);
    weights_.push_back(Root{std::vector<int>(l, 0)});
  }
  for (std::size_t r = 0; r < pos.size(); ++r) {
    basis_.push_back({BasisElement::Kind::E, r});
    matrices_.push_back(e_mats[r]);
    weights_.push_back(pos[r]);
  }

  for (std::size_t idx = 0; idx < dim(); ++idx)
    if (matrices_[idx].is_zero()) throw InconsistencyError("zero root vector for " + label(idx));

  const std::size_t d = dim();
  brackets_.resize(d * d);
  forms_.resize(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (x == y) continue;
      if (y < x) {
        BasisCombination neg = brackets_[y * d + x];
        for (auto& term : neg) term.second = -term.second;
        brackets_[x * d + y] = std::move(neg);
      } else {
        brackets_[x * d + y] = decompose(commutator(matrices_[x], matrices_[y]));
      }
    }

  const Root& theta = roots_.highest_root();
  form_scale_ = 1 / (matrices_[e_index(theta)] * matrices_[f_index(theta)]).trace();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = x; y < d; ++y) {
      Rational v = invariant_form(matrices_[x], matrices_[y]);
      forms_[x * d + y] = v;
      forms_[y * d + x] = v;
    }
}

std::size_t LieAlgebra::f_index(const Root& alpha) const {
  auto r = roots_.positive_index(alpha);
  if (!r) throw std::invalid_argument("not a positive root: " + alpha.label());
  return *r;
}

std::size_t LieAlgebra::e_index(const Root& alpha) const {
  return f_index(alpha) + num_positive() + rank();
}

std::size_t LieAlgebra::h_index(std::size_t i) const {
  if (i < 1 || i > rank()) throw std::invalid_argument("h index out of range");
  return num_positive() + i - 1;
}

std::string LieAlgebra::label(std::size_t idx) const {
  const auto& t = basis_.at(idx);
  switch (t.kind) {
    case BasisElement::Kind::F: return "f[" + roots_.positive_roots()[t.index].label() + "]";
    case BasisElement::Kind::E: return "e[" + roots_.positive_roots()[t.index].label() + "]";
    case BasisElement::Kind::H: return "h" + std::to_string(t.index);
  }
  return "?";
}

std::vector<LieAlgebra::Chevalley> LieAlgebra::chevalley_generators() const {
  std::vector<Chevalley> out;
  for (std::size_t i = 1; i <= rank(); ++i) {
    const Root& a = roots_.simple_root(i);
    out.push_back({e_index(a), f_index(a), h_index(i)});
  }
  return out;
}

std::size_t LieAlgebra::root_vector(const Root& alpha, bool raising) const {
  return raising ? e_index(alpha) : f_index(alpha);
}

Rational LieAlgebra::invariant_form(const MatrixElement& x, const MatrixElement& y) const {
  return (x * y).trace() * form_scale_;
}

BasisCombination LieAlgebra::decompose(const MatrixElement& m) const {
  if (m.size() != n_) throw std::invalid_argument("decompose: matrix size mismatch");
  BasisCombination out;
  const std::size_t l = rank();
  // Root components: each root space is one-dimensional; read the coefficient at
  // the first nonzero entry of the basis matrix.
  for (std::size_t idx = 0; idx < dim(); ++idx) {
    if (is_h(idx)) continue;
    const MatrixElement& b = matrices_[idx];
    for (std::size_t i = 0; i < n_; ++i) {
      bool found = false;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(b(i, j)) == 0) continue;
        Rational c = m(i, j) / b(i, j);
        if (sgn(c) != 0) out.emplace_back(idx, c);
        found = true;
        break;
      }
      if (found) break;
    }
  }
  // Cartan part: diag(d_1..d_l) = sum c_i alpha_i^vee, so c_j = d_1 + ... + d_j (halved for j = l).
  Rational partial = 0;
  for (std::size_t j = 1; j <= l; ++j) {
    partial += m(matrix_pos(static_cast<int>(j)), matrix_pos(static_cast<int>(j)));
    Rational c = j < l ? partial : partial / 2;
    if (sgn(c) != 0) out.emplace_back(h_index(j), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  if (!(compose(out) == m)) throw std::invalid_argument("decompose: matrix is not in so(2l+1)");
  return out;
}

MatrixElement LieAlgebra::compose(const BasisCombination& c) const {
  MatrixElement out(n_);
  for (const auto& [idx, coeff] : c) out = out + matrices_.at(idx) * coeff;
  return out;
}

std::vector<Rational> LieAlgebra::h_of_root(const Root& alpha) const {
  BasisCombination h = bracket(e_index(alpha), f_index(alpha));
  std::vector<Rational> out(rank());
  for (const auto& [idx, c] : h) {
    if (!is_h(idx)) throw InconsistencyError("[e_alpha, f_alpha] left the Cartan subalgebra");
    out[idx - num_positive()] = c;
  }
  return out;
}

}  // namespace blvoa
