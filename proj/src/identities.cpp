#include "blvoa/identities.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace blvoa {

namespace {

Root eps(std::size_t l, std::size_t i) { return Root::epsilon(l, i); }

UEAElement gen_power(const EnvelopingAlgebra& U, std::size_t idx, unsigned n) {
  return U.power(U.generator(idx), n);
}

// h_alpha (h_alpha - 1) ... (h_alpha - count + 1) shifted to start at `start`.
CartanPolynomial h_alpha_falling(const EnvelopingAlgebra& U, const Root& alpha, const Rational& start, unsigned count) {
  return falling_product(CartanPolynomial::linear(U.lie().h_of_root(alpha)), start, count);
}

Rational descending(unsigned m, unsigned k) { return Rational(falling_factorial(m, k)); }

CartanPolynomial default_cubic(std::size_t l) {
  auto h1 = CartanPolynomial::variable(l, 1);
  auto hl = CartanPolynomial::variable(l, l);
  return h1 * h1 * hl - h1 * Rational(1, 2) + CartanPolynomial::constant(l, 3);
}

std::string describe(int id, const IdentityParams& p) {
  std::ostringstream os;
  switch (id) {
    case 1:
    case 10:
      os << "alpha=" << p.alpha->label() << " m=" << p.m;
      if (id == 10) os << " k=" << p.k;
      break;
    case 2: os << "alpha=" << p.alpha->label() << " k=" << p.k << " m=" << p.m; break;
    case 3: os << "i=" << p.i << " k=" << p.k; break;
    case 4: os << "i=" << p.i << " k=" << p.k << " j=" << p.j; break;
    case 5: os << "i=" << p.i << " r=" << p.r << " k=" << p.k; break;
    case 6: os << "alpha=" << p.alpha->label() << " k=" << p.k; break;
    case 11: os << "i=" << p.i << " k=" << p.k; break;
    default: os << "i=" << p.i << " k=" << p.k << " m=" << p.m; break;
  }
  return os.str();
}

}  // namespace

IdentityOutcome check_identity(const EnvelopingAlgebra& U, int id, const IdentityParams& p) {
  const LieAlgebra& g = U.lie();
  const std::size_t l = g.rank();
  if (id < 1 || id > 12) throw std::invalid_argument("identity id must be in 1..12");
  if ((id == 1 || id == 2 || id == 6 || id == 10) && !p.alpha) throw std::invalid_argument("identity needs a root");
  IdentityOutcome out{std::to_string(id), describe(id, p)};

  const bool needs_i3 = id == 7 || id == 8 || id == 9 || id == 11 || id == 12;
  if (needs_i3 && l < 3) {
    out.skipped = true;
    return out;
  }
  if (p.i < (needs_i3 ? 3u : 2u) || p.i > l) throw std::invalid_argument("index i out of range");

  auto mod_n = [&](const UEAElement& x) { return U.reduce_mod_nplus(x); };
  const Root e1 = eps(l, 1);
  const Root ei = eps(l, p.i);
  const Root e2 = eps(l, 2);

  switch (id) {
    case 1: {
      const Root& a = *p.alpha;
      UEAElement lhs = U.ad_power(g.e_index(a), p.m, gen_power(U, g.f_index(a), p.m));
      UEAElement rhs = U.from_cartan(h_alpha_falling(U, a, 0, p.m) * Rational(factorial(p.m)));
      out.holds = mod_n(lhs) == rhs;
      break;
    }
    case 2: {
      const Root& a = *p.alpha;
      if (p.k <= p.m) throw std::invalid_argument("identity 2 needs k > m");
      out.holds = mod_n(U.ad_power(g.e_index(a), p.k, gen_power(U, g.f_index(a), p.m))).is_zero();
      break;
    }
    case 3: {
      UEAElement lhs = U.ad_power(g.e_index(e1), 2 * p.k, gen_power(U, g.f_index(e1 + ei), p.k));
      Rational c = Rational(factorial(2 * p.k)) * (p.k % 2 ? -1 : 1);
      out.holds = lhs == gen_power(U, g.e_index(e1 - ei), p.k) * c;
      break;
    }
    case 4: {
      if (p.j == 0) throw std::invalid_argument("identity 4 needs j > 0");
      out.holds = U.ad_power(g.e_index(e1), 2 * p.k + p.j, gen_power(U, g.f_index(e1 + ei), p.k)).is_zero();
      break;
    }
    case 5: {
      if (p.r == 0) throw std::invalid_argument("identity 5 needs r > 0");
      out.holds = mod_n(U.ad_power(g.e_index(e1), p.r, gen_power(U, g.f_index(e1 - ei), p.k))).is_zero();
      break;
    }
    case 6: {
      const Root& a = *p.alpha;
      CartanPolynomial poly = p.p ? *p.p : default_cubic(l);
      std::vector<Rational> shift(l);
      for (std::size_t s = 1; s <= l; ++s)
        shift[s - 1] = Rational(p.k) * coroot_pairing(Weight(a), g.roots().simple_root(s));
      UEAElement ek = gen_power(U, g.e_index(a), p.k);
      out.holds = U.multiply(ek, U.from_cartan(poly)) == U.multiply(U.from_cartan(poly.shifted(shift)), ek);
      break;
    }
    case 7: {
      if (p.k > p.m) throw std::invalid_argument("identity 7 needs k <= m");
      UEAElement lhs = U.ad_power(g.e_index(e1 + ei), p.k, gen_power(U, g.f_index(e1 + e2), p.m));
      UEAElement rhs = U.multiply(gen_power(U, g.f_index(e1 + e2), p.m - p.k), gen_power(U, g.f_index(e2 - ei), p.k));
      out.holds = lhs == rhs * descending(p.m, p.k);
      break;
    }
    case 8: {
      if (p.k == 0) throw std::invalid_argument("identity 8 needs k > 0");
      out.holds = mod_n(U.ad_power(g.e_index(e1 + ei), p.k, gen_power(U, g.f_index(e1 - e2), p.m))).is_zero();
      break;
    }
    case 9: {
      if (p.k == 0) throw std::invalid_argument("identity 9 needs k > 0");
      out.holds = mod_n(U.ad_power(g.e_index(e1 + e2), p.k, gen_power(U, g.f_index(e2 - ei), p.m))).is_zero();
      break;
    }
    case 10: {
      const Root& a = *p.alpha;
      if (p.k > p.m) throw std::invalid_argument("identity 10 needs k <= m");
      UEAElement lhs = U.ad_power(g.e_index(a), p.k, gen_power(U, g.f_index(a), p.m));
      // (h_a - m + k) ... (h_a - m + 1): k factors starting at shift m - k
      CartanPolynomial poly = h_alpha_falling(U, a, Rational(p.m) - p.k, p.k) * descending(p.m, p.k);
      UEAElement rhs = U.multiply(gen_power(U, g.f_index(a), p.m - p.k), U.from_cartan(poly));
      out.holds = mod_n(lhs) == mod_n(rhs);
      break;
    }
    case 11: {
      UEAElement lhs = U.ad_power(g.e_index(e1 - ei), p.k, gen_power(U, g.f_index(e2 - ei), p.k));
      out.holds = lhs == gen_power(U, g.e_index(e1 - e2), p.k) * Rational(factorial(p.k));
      break;
    }
    case 12: {
      if (p.k == 0) throw std::invalid_argument("identity 12 needs k > 0");
      out.holds = mod_n(U.ad_power(g.e_index(e1 - ei), p.k, gen_power(U, g.f_index(e1 - e2), p.m))).is_zero();
      break;
    }
  }
  return out;
}

IdentityOutcome check_commuting_monomials(const EnvelopingAlgebra& U, const std::vector<Root>& betas,
                                          const std::vector<Root>& gammas) {
  const LieAlgebra& g = U.lie();
  IdentityOutcome out{"commuting", ""};
  std::ostringstream os;
  os << "Y1=";
  for (const auto& b : betas) os << "e[" << b.label() << "]";
  os << " Y2=";
  for (const auto& c : gammas) os << "f[" << c.label() << "]";
  out.params = os.str();

  std::vector<std::size_t> es, fs;
  for (const auto& b : betas) es.push_back(g.e_index(b));
  for (const auto& c : gammas) fs.push_back(g.f_index(c));
  for (std::size_t a = 0; a < es.size(); ++a)
    for (std::size_t b = a + 1; b < es.size(); ++b)
      if (!g.bracket(es[a], es[b]).empty()) throw std::invalid_argument("e-factors do not commute");
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b)
      if (!g.bracket(fs[a], fs[b]).empty()) throw std::invalid_argument("f-factors do not commute");

  UEAElement y1 = U.word(es), y2 = U.word(fs);
  UEAElement target = U.reduce_mod_nplus(U.multiply(y1, y2));
  UEAElement first = U.reduce_mod_nplus(U.ad_word(es, y2));
  UEAElement second = U.reduce_mod_nplus(U.ad_word(fs, y1));
  out.holds = first == target && second == target * Rational(gammas.size() % 2 ? -1 : 1);
  return out;
}

IdentityOutcome check_multinomial(const EnvelopingAlgebra& U, std::size_t x, unsigned n,
                                  const std::vector<UEAElement>& factors, const std::string& label) {
  IdentityOutcome out{"multinomial", "X=" + U.lie().label(x) + " n=" + std::to_string(n) + " Y=" + label};
  UEAElement y = U.one();
  for (const auto& f : factors) y = U.multiply(y, f);
  out.holds = U.ad_power(x, n, y) == U.ad_power_multinomial(x, n, factors);
  return out;
}

std::vector<IdentityOutcome> run_identity_suite(const EnvelopingAlgebra& U, unsigned max_param) {
  const LieAlgebra& g = U.lie();
  const std::size_t l = g.rank();
  const auto& pos = g.roots().positive_roots();
  std::vector<IdentityOutcome> out;
  auto run = [&](int id, const IdentityParams& p) { out.push_back(check_identity(U, id, p)); };

  for (const auto& a : pos)
    for (unsigned m = 0; m <= max_param; ++m) {
      run(1, {.alpha = a, .m = m});
      for (unsigned k = m + 1; k <= max_param; ++k) run(2, {.alpha = a, .k = k, .m = m});
      for (unsigned k = 0; k <= m; ++k) run(10, {.alpha = a, .k = k, .m = m});
      run(6, {.alpha = a, .k = m});
    }
  for (std::size_t i = 2; i <= l; ++i)
    for (unsigned k = 0; k <= max_param; ++k) {
      run(3, {.i = i, .k = k});
      for (unsigned j = 1; j <= max_param; ++j) run(4, {.i = i, .k = k, .j = j});
      for (unsigned r = 1; r <= max_param; ++r) run(5, {.i = i, .k = k, .r = r});
    }
  if (l < 3) {
    for (int id : {7, 8, 9, 11, 12}) run(id, {.i = 3});
  } else {
    for (std::size_t i = 3; i <= l; ++i)
      for (unsigned m = 0; m <= max_param; ++m) {
        for (unsigned k = 0; k <= m; ++k) run(7, {.i = i, .k = k, .m = m});
        for (unsigned k = 1; k <= max_param; ++k) {
          run(8, {.i = i, .k = k, .m = m});
          run(9, {.i = i, .k = k, .m = m});
          run(12, {.i = i, .k = k, .m = m});
        }
        run(11, {.i = i, .k = m});
      }
  }

  // all commuting multisets up to size max_param with equal root sums
  using Multiset = std::vector<std::size_t>;  // indices into pos, nondecreasing
  auto commuting_sets = [&](bool raising) {
    std::map<Root, std::vector<Multiset>> by_sum;
    std::function<void(Multiset&, std::size_t)> grow = [&](Multiset& cur, std::size_t from) {
      if (!cur.empty()) {
        Root sum = pos[cur[0]];
        for (std::size_t s = 1; s < cur.size(); ++s) sum = sum + pos[cur[s]];
        by_sum[sum].push_back(cur);
      }
      if (cur.size() == max_param) return;
      for (std::size_t c = from; c < pos.size(); ++c) {
        std::size_t idx = raising ? g.e_index(pos[c]) : g.f_index(pos[c]);
        bool ok = true;
        for (auto q : cur)
          if (!g.bracket(raising ? g.e_index(pos[q]) : g.f_index(pos[q]), idx).empty()) ok = false;
        if (!ok) continue;
        cur.push_back(c);
        grow(cur, c);
        cur.pop_back();
      }
    };
    Multiset cur;
    grow(cur, 0);
    return by_sum;
  };
  auto e_sets = commuting_sets(true);
  auto f_sets = commuting_sets(false);
  for (const auto& [sum, es] : e_sets) {
    auto it = f_sets.find(sum);
    if (it == f_sets.end()) continue;
    for (const auto& be : es)
      for (const auto& ga : it->second) {
        std::vector<Root> betas, gammas;
        for (auto q : be) betas.push_back(pos[q]);
        for (auto q : ga) gammas.push_back(pos[q]);
        out.push_back(check_commuting_monomials(U, betas, gammas));
      }
  }

  // multinomial adjoint expansion on pseudo-random products of basis elements
  std::mt19937 gen(4099 + static_cast<unsigned>(l));
  std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
  std::uniform_int_distribution<unsigned> len(1, max_param);
  for (std::size_t x = 0; x < g.dim(); ++x)
    for (unsigned n = 0; n <= max_param; ++n) {
      std::vector<UEAElement> factors(len(gen));
      std::string label;
      for (auto& f : factors) {
        std::size_t y = pick(gen);
        f = U.generator(y);
        label += g.label(y);
      }
      out.push_back(check_multinomial(U, x, n, factors, label));
    }
  return out;
}

}  // namespace blvoa
