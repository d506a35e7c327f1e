#include "blvoa/zero_weight.hpp"

#include "blvoa/affine.hpp"
#include "blvoa/linalg.hpp"

#include <deque>
#include <stdexcept>

namespace blvoa {

std::size_t AdModule::dimension() const {
  std::size_t d = 0;
  for (const auto& [w, b] : spaces) d += b.size();
  return d;
}

const std::vector<UEAElement>& AdModule::zero_space() const {
  static const std::vector<UEAElement> empty;
  auto it = spaces.find(Root{std::vector<int>(rank, 0)});
  return it == spaces.end() ? empty : it->second;
}

UEAElement zhu_singular_image(const EnvelopingAlgebra& U, unsigned n) {
  const LieAlgebra& g = U.lie();
  VermaModule N(U.lie_ptr(), critical_level(g.rank(), n), U.term_guard());
  return fz_image(U, build_singular_candidate(N, n));
}

namespace {

struct WeightSpace {
  std::map<Monomial, std::size_t> columns;
  EchelonBasis echelon;
  std::vector<UEAElement> elements;

  bool add(const UEAElement& x) {
    SparseVector v;
    for (const auto& [m, c] : x.terms()) {
      auto [it, inserted] = columns.emplace(m, columns.size());
      v.emplace(it->second, c);
    }
    if (!echelon.insert(std::move(v))) return false;
    elements.push_back(x);
    return true;
  }
};

}  // namespace

AdModule generate_module(const EnvelopingAlgebra& U, unsigned n, std::size_t ceiling) {
  const LieAlgebra& g = U.lie();
  const std::size_t l = g.rank();
  std::vector<Rational> top(l);
  top[0] = 2 * static_cast<long>(n);
  const Integer expected = g.roots().weyl_dim(Weight(top));
  if (expected > static_cast<unsigned long>(ceiling))
    throw GuardExceeded("dim V(2n e1) = " + expected.get_str() + " exceeds oracle ceiling " + std::to_string(ceiling));

  AdModule R;
  R.rank = l;
  R.n = n;
  R.highest = zhu_singular_image(U, n);
  GradedWeight hw = U.weight_of(R.highest);
  Root top_root{std::vector<int>(l, 0)};
  top_root.coords[0] = 2 * static_cast<int>(n);
  if (hw.mixed || !(hw.weight == top_root)) throw InconsistencyError("v_n' does not have weight 2n e1");

  std::map<Root, WeightSpace> spaces;
  std::deque<std::pair<Root, UEAElement>> queue;
  spaces[hw.weight].add(R.highest);
  queue.emplace_back(hw.weight, R.highest);

  std::vector<std::size_t> gens;
  for (const auto& c : g.chevalley_generators()) {
    gens.push_back(c.e);
    gens.push_back(c.f);
  }
  std::size_t total = 1;
  while (!queue.empty()) {
    auto [w, x] = std::move(queue.front());
    queue.pop_front();
    for (std::size_t gi : gens) {
      UEAElement y = U.ad(U.generator(gi), x);
      if (y.is_zero()) continue;
      Root wy = w + g.weight(gi);
      if (spaces[wy].add(y)) {
        if (++total > expected) throw InconsistencyError("adjoint module exceeds dim V(2n e1)");
        queue.emplace_back(wy, std::move(y));
      }
    }
  }
  for (auto& [w, s] : spaces)
    if (!s.elements.empty()) R.spaces.emplace(w, std::move(s.elements));
  if (R.dimension() != expected) throw InconsistencyError("adjoint module dimension differs from dim V(2n e1)");
  return R;
}

std::vector<CartanPolynomial> p0_basis(const EnvelopingAlgebra& U, const AdModule& R) {
  PolynomialSpan span(R.rank);
  for (const auto& r : R.zero_space()) span.insert(U.hw_polynomial(r));
  return span.basis();
}

CartanPolynomial explicit_p(const LieAlgebra& g, std::size_t i, unsigned n) {
  const std::size_t l = g.rank();
  if (i < 1 || i > l) throw std::invalid_argument("p_i needs 1 <= i <= l");
  CartanPolynomial hi = CartanPolynomial::variable(l, i);
  if (i == l) return falling_product(hi, 0, 2 * n);
  CartanPolynomial hsum = CartanPolynomial::linear(g.h_of_root(Root::epsilon(l, i) + Root::epsilon(l, i + 1)));
  Rational offset = Rational(static_cast<long>(l - i)) - Rational(1, 2);
  return falling_product(hi, 0, n) * falling_product(hsum, -offset, n);
}

CartanPolynomial explicit_q(const LieAlgebra& g, unsigned n) {
  const std::size_t l = g.rank();
  const Root e1 = Root::epsilon(l, 1);
  const CartanPolynomial h_e1 = CartanPolynomial::linear(g.h_of_root(e1));
  std::vector<CartanPolynomial> h_diff(l + 1);
  for (std::size_t j = 2; j <= l; ++j) h_diff[j] = CartanPolynomial::linear(g.h_of_root(e1 - Root::epsilon(l, j)));

  CartanPolynomial q(l);
  std::vector<unsigned> k(l + 1, 0);
  // compositions (k_1, ..., k_l) of n
  auto visit = [&](auto&& self, std::size_t pos, unsigned left) -> void {
    if (pos == l) {
      k[l] = left;
      const unsigned k1 = k[1];
      Rational weight = Rational(1) / (Rational(factorial(k1)) * Rational(Integer(1) << (2 * k1)));
      CartanPolynomial term = falling_product(h_e1, Rational(2 * (n - k1)), 2 * k1);
      unsigned shift = 0;
      for (std::size_t j = 2; j <= l; ++j) {
        term = term * falling_product(h_diff[j], Rational(shift), k[j]);
        shift += k[j];
      }
      q += term * weight;
      return;
    }
    for (unsigned v = 0; v <= left; ++v) {
      k[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  if (l == 1) return q;
  visit(visit, 1, n);
  return q;
}

P0Comparison compare_p0(const EnvelopingAlgebra& U, unsigned n, std::size_t ceiling) {
  const LieAlgebra& g = U.lie();
  const std::size_t l = g.rank();
  AdModule R = generate_module(U, n, ceiling);
  P0Comparison out;
  out.dim_R = R.dimension();
  out.dim_R0 = R.zero_space().size();

  PolynomialSpan oracle(l);
  for (const auto& r : R.zero_space()) oracle.insert(U.hw_polynomial(r));
  out.oracle_dim = oracle.dimension();
  out.oracle_basis = oracle.basis();

  PolynomialSpan explicit_span(l);
  out.all_members = true;
  for (std::size_t i = 1; i <= l; ++i) {
    CartanPolynomial p = explicit_p(g, i, n);
    explicit_span.insert(p);
    bool in = oracle.contains(p);
    out.membership.emplace_back("p" + std::to_string(i), in);
    out.all_members = out.all_members && in;
  }
  CartanPolynomial q = explicit_q(g, n);
  bool q_in = oracle.contains(q);
  out.membership.emplace_back("q", q_in);
  out.all_members = out.all_members && q_in;
  out.q_in_p_span = explicit_span.contains(q);
  out.explicit_dim = explicit_span.dimension();
  out.spans_equal = oracle.same_span(explicit_span);
  explicit_span.insert(q);
  out.spans_equal_with_q = oracle.same_span(explicit_span);
  return out;
}

}  // namespace blvoa
