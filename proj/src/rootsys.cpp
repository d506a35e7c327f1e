#include "blvoa/rootsys.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace blvoa {

bool Root::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
  Root out = *this;
  for (int& c : out.coords) c = -c;
  return out;
}

Root Root::operator+(const Root& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("root rank mismatch");
  Root out = *this;
  for (std::size_t i = 0; i < coords.size(); ++i) out.coords[i] += other.coords[i];
  return out;
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

Root Root::epsilon(std::size_t rank, std::size_t i) {
  Root out{std::vector<int>(rank, 0)};
  out.coords.at(i - 1) = 1;
  return out;
}

std::string Root::label() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    int c = coords[i];
    if (c == 0) continue;
    if (c < 0) os << '-';
    else if (!first) os << '+';
    if (std::abs(c) != 1) os << std::abs(c);
    os << 'e' << (i + 1);
    first = false;
  }
  if (first) return "0";
  return os.str();
}

Weight::Weight(const Root& root) {
  eps_.reserve(root.rank());
  for (int c : root.coords) eps_.emplace_back(c);
}

Weight Weight::from_fundamental(const std::vector<Rational>& coords) {
  const std::size_t l = coords.size();
  if (l == 0) throw std::invalid_argument("empty weight");
  // omega_i = e_1 + ... + e_i for i < l, omega_l = (e_1 + ... + e_l) / 2.
  std::vector<Rational> eps(l);
  Rational tail = coords[l - 1] / 2;
  for (std::size_t j = l; j-- > 0;) {
    if (j < l - 1) tail += coords[j];
    eps[j] = tail;
  }
  return Weight(std::move(eps));
}

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  std::vector<Rational> c(rank);
  c.at(i - 1) = 1;
  return from_fundamental(c);
}

std::vector<Rational> Weight::fundamental_coords() const {
  const std::size_t l = eps_.size();
  std::vector<Rational> out(l);
  for (std::size_t i = 0; i + 1 < l; ++i) out[i] = eps_[i] - eps_[i + 1];
  if (l > 0) out[l - 1] = 2 * eps_[l - 1];
  return out;
}

bool Weight::is_zero() const {
  return std::all_of(eps_.begin(), eps_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Weight Weight::operator+(const Weight& other) const {
  if (rank() != other.rank()) throw std::invalid_argument("weight rank mismatch");
  Weight out = *this;
  for (std::size_t i = 0; i < eps_.size(); ++i) out.eps_[i] += other.eps_[i];
  return out;
}

Weight Weight::operator-(const Weight& other) const { return *this + other * Rational(-1); }

Weight Weight::operator*(const Rational& s) const {
  Weight out = *this;
  for (auto& c : out.eps_) c *= s;
  return out;
}

Weight operator*(const Rational& s, const Weight& w) { return w * s; }

std::string Weight::to_fundamental_string() const {
  auto c = fundamental_coords();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    Rational a = abs(c[i]);
    if (!first) os << (sgn(c[i]) < 0 ? " - " : " + ");
    else if (sgn(c[i]) < 0) os << '-';
    if (a != 1) os << to_display_string(a) << '*';
    os << 'w' << (i + 1);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string Weight::to_eps_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < eps_.size(); ++i) os << (i ? ", " : "") << to_display_string(eps_[i]);
  os << ')';
  return os.str();
}

Rational inner(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("inner: rank mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) out += a.eps()[i] * b.eps()[i];
  return out;
}

Rational inner(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("inner: rank mismatch");
  long out = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) out += static_cast<long>(a.coords[i]) * b.coords[i];
  return Rational(out);
}

Rational inner(const Weight& a, const Root& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("inner: rank mismatch");
  Rational out = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) out += a.eps()[i] * b.coords[i];
  return out;
}

Rational coroot_pairing(const Weight& mu, const Root& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("coroot_pairing: zero root");
  return 2 * inner(mu, alpha) / inner(alpha, alpha);
}

RootSystem::RootSystem(std::size_t rank) : rank_(rank) {
  if (rank < 2) throw std::invalid_argument("B_l root system requires rank >= 2");
  const std::size_t l = rank;
  for (std::size_t i = 1; i <= l; ++i) {
    positive_.push_back(Root::epsilon(l, i));
    for (std::size_t j = i + 1; j <= l; ++j) {
      positive_.push_back(Root::epsilon(l, i) - Root::epsilon(l, j));
      positive_.push_back(Root::epsilon(l, i) + Root::epsilon(l, j));
    }
  }
  std::sort(positive_.begin(), positive_.end());
  for (std::size_t i = 1; i < l; ++i) simple_.push_back(Root::epsilon(l, i) - Root::epsilon(l, i + 1));
  simple_.push_back(Root::epsilon(l, l));
  theta_ = Root::epsilon(l, 1) + Root::epsilon(l, 2);
  rho_ = Weight::from_fundamental(std::vector<Rational>(l, Rational(1)));
}

std::vector<Root> RootSystem::all_roots() const {
  std::vector<Root> out = positive_;
  for (const auto& r : positive_) out.push_back(-r);
  return out;
}

std::optional<std::size_t> RootSystem::positive_index(const Root& root) const {
  auto it = std::lower_bound(positive_.begin(), positive_.end(), root);
  if (it == positive_.end() || *it != root) return std::nullopt;
  return static_cast<std::size_t>(it - positive_.begin());
}

bool RootSystem::is_root(const Root& root) const {
  return positive_index(root).has_value() || positive_index(-root).has_value();
}

std::vector<int> RootSystem::simple_root_coeffs(const Root& root) const {
  if (root.rank() != rank_) throw std::invalid_argument("simple_root_coeffs: rank mismatch");
  // alpha_i = e_i - e_{i+1}, alpha_l = e_l, so the coefficient of alpha_j is a partial sum.
  std::vector<int> out(rank_);
  int partial = 0;
  for (std::size_t j = 0; j < rank_; ++j) {
    partial += root.coords[j];
    out[j] = partial;
  }
  return out;
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  std::vector<std::vector<int>> a(rank_, std::vector<int>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      a[i][j] = static_cast<int>(coroot_pairing(Weight(simple_[j]), simple_[i]).get_num().get_si());
  return a;
}

void RootSystem::check_rank(const Weight& mu) const {
  if (mu.rank() != rank_) throw std::invalid_argument("weight rank does not match root system");
}

bool RootSystem::is_dominant_integral(const Weight& mu) const {
  check_rank(mu);
  for (const auto& c : mu.fundamental_coords())
    if (!is_integer(c) || sgn(c) < 0) return false;
  return true;
}

Integer RootSystem::weyl_dim(const Weight& mu) const {
  if (!is_dominant_integral(mu)) throw std::invalid_argument("weyl_dim: weight is not dominant integral");
  Weight shifted = mu + rho_;
  Rational dim = 1;
  for (const auto& alpha : positive_) dim *= inner(shifted, alpha) / inner(rho_, alpha);
  if (!is_integer(dim)) throw InconsistencyError("weyl_dim produced a non-integer");
  return dim.get_num();
}

}  // namespace blvoa
