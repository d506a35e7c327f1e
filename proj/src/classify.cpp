#include "blvoa/classify.hpp"

#include "blvoa/affine.hpp"
#include "blvoa/zero_weight.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace blvoa {

namespace {

bool fundamental_less(const Weight& a, const Weight& b) { return a.fundamental_coords() < b.fundamental_coords(); }

void sort_entries(std::vector<ClassificationEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const ClassificationEntry& a, const ClassificationEntry& b) { return fundamental_less(a.mu, b.mu); });
}

std::string subset_label(const std::set<std::size_t>& S, bool prime) {
  std::string out = prime ? "S'={" : "S={";
  bool first = true;
  for (auto i : S) {
    if (!first) out += ",";
    out += std::to_string(i);
    first = false;
  }
  return out + "}";
}

Weight mu_from_subset(const std::set<std::size_t>& S, std::size_t l, const Rational& shift, bool add_omega_l) {
  for (auto i : S)
    if (i < 1 || i >= l) throw std::invalid_argument("S must be a subset of {1, ..., l-1}");
  std::vector<std::size_t> idx(S.begin(), S.end());
  const std::size_t k = idx.size();
  std::vector<Rational> c(l);
  for (std::size_t j = 0; j < k; ++j) {
    Rational v = static_cast<long>(idx[j]);
    for (std::size_t s = j + 1; s < k; ++s) v += 2 * Rational((s - j) % 2 ? -1 : 1) * static_cast<long>(idx[s]);
    v += ((k - j) % 2 ? -1 : 1) * shift;
    c[idx[j] - 1] = v;
  }
  if (add_omega_l) c[l - 1] += 1;
  return Weight::from_fundamental(c);
}

bool finite_dim_condition(const RootSystem& rs, const Weight& mu, unsigned n) {
  return rs.is_dominant_integral(mu) && inner(mu, Weight(Root::epsilon(rs.rank(), 1))) <= Rational(n) - Rational(1, 2);
}

std::vector<std::set<std::size_t>> all_subsets(std::size_t l) {
  std::vector<std::set<std::size_t>> out;
  for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
    std::set<std::size_t> S;
    for (std::size_t i = 1; i < l; ++i)
      if (mask & (1u << (i - 1))) S.insert(i);
    out.push_back(S);
  }
  return out;
}

}  // namespace

std::vector<Weight> solve_triangular(const LieAlgebra& g, unsigned n) {
  const std::size_t l = g.rank();
  std::vector<std::vector<Rational>> partial{{}};  // values h_l, h_{l-1}, ... (reversed)
  std::vector<std::vector<Rational>> next;
  for (unsigned v = 0; v < 2 * n; ++v) next.push_back({Rational(v)});
  partial = std::move(next);
  for (std::size_t i = l - 1; i >= 1; --i) {
    std::vector<Rational> coeff = g.h_of_root(Root::epsilon(l, i) + Root::epsilon(l, i + 1));
    std::vector<std::vector<Rational>> grown;
    for (const auto& known : partial) {
      // known[t] = h_{l-t}
      Rational rest = 0;
      for (std::size_t s = i + 1; s <= l; ++s) rest += coeff[s - 1] * known[l - s];
      std::set<Rational> roots;
      for (unsigned j = 0; j < n; ++j) {
        roots.insert(Rational(j));
        Rational r = Rational(j) - (Rational(static_cast<long>(l - i)) - Rational(1, 2)) - rest;
        r.canonicalize();
        roots.insert(r);
      }
      for (const auto& r : roots) {
        auto extended = known;
        extended.push_back(r);
        grown.push_back(std::move(extended));
      }
    }
    partial = std::move(grown);
  }
  std::set<std::vector<Rational>> unique;
  for (const auto& rev : partial) unique.insert(std::vector<Rational>(rev.rbegin(), rev.rend()));
  std::vector<Weight> out;
  for (const auto& c : unique) out.push_back(Weight::from_fundamental(c));
  std::sort(out.begin(), out.end(), fundamental_less);
  return out;
}

Weight mu_S(const std::set<std::size_t>& S, std::size_t l) {
  return mu_from_subset(S, l, Rational(static_cast<long>(l)) - Rational(1, 2), false);
}

Weight mu_S_prime(const std::set<std::size_t>& S, std::size_t l) {
  return mu_from_subset(S, l, Rational(static_cast<long>(l)) + Rational(1, 2), true);
}

ClassificationResult classify_category_O(std::size_t l, unsigned n, const ClassifyOptions& opts) {
  if (l < 2 || n < 1) throw std::invalid_argument("need l >= 2 and n >= 1");
  auto g = std::make_shared<const LieAlgebra>(l);
  const RootSystem& rs = g->roots();
  ClassificationResult res;
  res.rank = l;
  res.n = n;
  res.level = critical_level(l, n);

  if (n == 1) {
    res.status = "complete";
    for (const auto& S : all_subsets(l)) {
      for (bool prime : {false, true}) {
        ClassificationEntry e{prime ? mu_S_prime(S, l) : mu_S(S, l), {"category-O"}, subset_label(S, prime), {}};
        if (finite_dim_condition(rs, e.mu, n)) e.tags.push_back("finite-dim");
        res.entries.push_back(std::move(e));
      }
    }
    sort_entries(res.entries);
    return res;
  }

  res.status = "candidate";
  CartanPolynomial q = explicit_q(*g, n);
  std::vector<CartanPolynomial> oracle;
  if (opts.use_oracle) {
    std::vector<Rational> top(l);
    top[0] = 2 * static_cast<long>(n);
    if (rs.weyl_dim(Weight(top)) <= static_cast<unsigned long>(opts.oracle_ceiling)) {
      EnvelopingAlgebra U(g, opts.term_guard);
      oracle = p0_basis(U, generate_module(U, n, opts.oracle_ceiling));
      res.oracle_filtered = true;
    }
  }
  for (const auto& mu : solve_triangular(*g, n)) {
    if (q.evaluate(mu) != 0) continue;
    bool killed = std::all_of(oracle.begin(), oracle.end(), [&](const CartanPolynomial& p) { return p.evaluate(mu) == 0; });
    if (!killed) continue;
    ClassificationEntry e{mu, {"category-O", "candidate"}, std::nullopt, {}};
    if (finite_dim_condition(rs, mu, n)) e.tags.push_back("finite-dim");
    res.entries.push_back(std::move(e));
  }
  sort_entries(res.entries);
  return res;
}

ClassificationResult classify_finite_dim(std::size_t l, unsigned n) {
  if (l < 2 || n < 1) throw std::invalid_argument("need l >= 2 and n >= 1");
  RootSystem rs(l);
  ClassificationResult res;
  res.rank = l;
  res.n = n;
  res.level = critical_level(l, n);
  res.status = "complete";
  // (μ, e_1) = c_1 + ... + c_{l-1} + c_l / 2 <= n - 1/2, i.e. 2(c_1 + ... + c_{l-1}) + c_l <= 2n - 1
  const long budget = 2 * static_cast<long>(n) - 1;
  std::vector<long> c(l, 0);
  auto visit = [&](auto&& self, std::size_t pos, long left) -> void {
    if (pos == l) {
      std::vector<Rational> coords(c.begin(), c.end());
      res.entries.push_back({Weight::from_fundamental(coords), {"finite-dim"}, std::nullopt, {}});
      return;
    }
    const long cost = pos + 1 == l ? 1 : 2;
    for (long v = 0; v * cost <= left; ++v) {
      c[pos] = v;
      self(self, pos + 1, left - v * cost);
    }
    c[pos] = 0;
  };
  visit(visit, 0, budget);
  sort_entries(res.entries);
  return res;
}

ClassificationResult certify(ClassificationResult result, unsigned m_max_override) {
  RootSystem rs(result.rank);
  for (auto& e : result.entries) e.admissibility = is_admissible(rs, {result.level, e.mu}, m_max_override);
  return result;
}

bool all_admissible(const ClassificationResult& result) {
  return std::all_of(result.entries.begin(), result.entries.end(),
                     [](const ClassificationEntry& e) { return e.admissibility && e.admissibility->admissible; });
}

}  // namespace blvoa
