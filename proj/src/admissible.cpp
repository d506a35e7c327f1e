#include "blvoa/admissible.hpp"

#include "blvoa/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blvoa {

bool AffineRealRoot::is_positive() const {
  if (mode > 0) return !alpha.is_zero();
  if (mode < 0) return false;
  for (int c : alpha.coords)
    if (c != 0) return c > 0 ? true : false;
  return false;
}

std::vector<Rational> AffineRealRoot::coroot() const {
  Rational len = inner(alpha, alpha);
  std::vector<Rational> out;
  for (int c : alpha.coords) out.push_back(Rational(2 * c) / len);
  out.push_back(Rational(2 * mode) / len);
  return out;
}

std::string AffineRealRoot::label(const RootSystem& rs) const {
  if (mode == 0) {
    for (std::size_t i = 1; i <= rs.rank(); ++i)
      if (rs.simple_root(i) == alpha) return "α_" + std::to_string(i) + "∨";
  }
  std::ostringstream os;
  os << "(";
  bool first = true;
  if (mode != 0) {
    if (mode != 1) os << mode;
    os << "δ";
    first = false;
  }
  for (std::size_t i = 0; i < alpha.coords.size(); ++i) {
    int c = alpha.coords[i];
    if (c == 0) continue;
    if (c < 0) os << "−";
    else if (!first) os << "+";
    if (std::abs(c) != 1) os << std::abs(c);
    os << "ε_" << (i + 1);
    first = false;
  }
  os << ")∨";
  return os.str();
}

Rational shifted_pairing(const RootSystem& rs, const AffineWeight& lambda, const AffineRealRoot& r) {
  Rational kh = lambda.level + static_cast<long>(rs.dual_coxeter());
  Weight shifted = rs.rho() + lambda.finite;
  return 2 * (Rational(r.mode) * kh + inner(shifted, r.alpha)) / inner(r.alpha, r.alpha);
}

AdmissibilityResult is_admissible(const RootSystem& rs, const AffineWeight& lambda, unsigned m_max_override) {
  const Rational kh = lambda.level + static_cast<long>(rs.dual_coxeter());
  if (sgn(kh) <= 0) throw std::domain_error("admissibility check needs k + h∨ > 0");
  const Weight shifted = rs.rho() + lambda.finite;
  Rational bound = 0;
  for (const auto& a : rs.positive_roots()) bound = std::max(bound, Rational(abs(inner(shifted, a))));
  // smallest m with m(k+h∨) > bound, doubled
  Rational q = bound / kh;
  Integer m0 = q.get_num() / q.get_den() + 1;
  if (m0 > 100000) throw std::overflow_error("admissibility window too large");
  AdmissibilityResult res;
  res.m_max = m_max_override ? m_max_override : static_cast<unsigned>(2 * m0.get_ui());

  res.regular = true;
  for (unsigned m = 0; m <= res.m_max; ++m) {
    const auto& roots = m == 0 ? rs.positive_roots() : rs.all_roots();
    for (const auto& a : roots) {
      AffineRealRoot r{a, static_cast<int>(m)};
      Rational p = shifted_pairing(rs, lambda, r);
      if (is_integer(p) && sgn(p) <= 0) {
        res.regular = false;
        if (!res.violation) res.violation = r;
      }
    }
  }

  // Integral positive coroots with central coefficient <= C. A decomposition of a coroot
  // only involves coroots of smaller or equal central coefficient, so the test below is exact
  // inside the window; the window is doubled until the simple set stops changing.
  auto collect = [&](unsigned C) {
    std::vector<AffineRealRoot> out;
    for (unsigned m = 0; m <= C; ++m) {
      const auto& roots = m == 0 ? rs.positive_roots() : rs.all_roots();
      for (const auto& a : roots) {
        AffineRealRoot r{a, static_cast<int>(m)};
        if (Rational(2 * static_cast<long>(m)) / inner(a, a) > C) continue;
        if (is_integer(shifted_pairing(rs, lambda, r))) out.push_back(r);
      }
    }
    return out;
  };
  auto simple_of = [&](const std::vector<AffineRealRoot>& integral) {
    std::set<std::vector<Rational>> coroots;
    for (const auto& r : integral) coroots.insert(r.coroot());
    std::vector<AffineRealRoot> simple;
    for (const auto& r : integral) {
      auto c = r.coroot();
      bool decomposable = false;
      for (const auto& s : integral) {
        auto d = s.coroot();
        std::vector<Rational> diff(c.size());
        for (std::size_t t = 0; t < c.size(); ++t) diff[t] = c[t] - d[t];
        if (coroots.count(diff)) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) simple.push_back(r);
    }
    return simple;
  };

  unsigned window = 2 * std::max(res.m_max, 1u);
  std::vector<AffineRealRoot> integral = collect(window);
  std::vector<AffineRealRoot> simple = simple_of(integral);
  for (int round = 0; round < 6; ++round) {
    std::vector<AffineRealRoot> wider = collect(2 * window);
    std::vector<AffineRealRoot> wider_simple = simple_of(wider);
    bool same = wider_simple.size() == simple.size() &&
                std::all_of(wider_simple.begin(), wider_simple.end(), [&](const AffineRealRoot& r) {
                  return std::find(simple.begin(), simple.end(), r) != simple.end();
                });
    window *= 2;
    integral = std::move(wider);
    simple = std::move(wider_simple);
    if (same) break;
  }
  res.coroot_window = window;
  res.integral_count = integral.size();
  res.simple_coroots = std::move(simple);

  std::vector<std::vector<Rational>> rows;
  for (const auto& r : integral) rows.push_back(r.coroot());
  res.full_rank = rank_of(rows) == rs.rank() + 1;

  std::sort(res.simple_coroots.begin(), res.simple_coroots.end(), [&](const AffineRealRoot& a, const AffineRealRoot& b) {
    if ((a.mode == 0) != (b.mode == 0)) return a.mode != 0;
    if (a.mode != b.mode) return a.mode < b.mode;
    return rs.simple_root_coeffs(b.alpha) < rs.simple_root_coeffs(a.alpha);
  });
  res.admissible = res.regular && res.full_rank;
  return res;
}

std::string format_coroot_set(const RootSystem& rs, const std::vector<AffineRealRoot>& roots) {
  std::string out = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) out += ", ";
    out += roots[i].label(rs);
  }
  return out + "}";
}

}  // namespace blvoa
