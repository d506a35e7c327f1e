#include "blvoa/uea.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace blvoa {

std::vector<std::pair<std::size_t, unsigned>> Monomial::factors() const {
  std::vector<std::pair<std::size_t, unsigned>> out;
  for (auto x : letters) {
    if (!out.empty() && out.back().first == x) ++out.back().second;
    else out.emplace_back(x, 1);
  }
  return out;
}

UEAElement UEAElement::scalar(const Rational& c) {
  UEAElement out;
  out.add_term(Monomial{}, c);
  return out;
}

void UEAElement::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

UEAElement& UEAElement::axpy(const Rational& a, const UEAElement& o) {
  if (sgn(a) == 0) return *this;
  for (const auto& [m, c] : o.terms_) add_term(m, a * c);
  return *this;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
  UEAElement out = *this;
  out += o;
  return out;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
  UEAElement out = *this;
  out.axpy(-1, o);
  return out;
}

UEAElement UEAElement::operator*(const Rational& s) const {
  UEAElement out;
  return out.axpy(s, *this);
}

std::size_t EnvelopingAlgebra::KeyHash::operator()(const std::vector<std::uint8_t>& k) const noexcept {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(k.data()), k.size()));
}

EnvelopingAlgebra::EnvelopingAlgebra(std::shared_ptr<const LieAlgebra> g, std::size_t term_guard)
    : g_(std::move(g)), guard_(term_guard) {
  if (!g_) throw std::invalid_argument("EnvelopingAlgebra: null Lie algebra");
  if (g_->dim() > 255) throw std::invalid_argument("EnvelopingAlgebra: basis too large");
  if (guard_ == 0) throw std::invalid_argument("EnvelopingAlgebra: guard must be positive");
}

EnvelopingAlgebra::EnvelopingAlgebra(std::size_t rank, std::size_t term_guard)
    : EnvelopingAlgebra(std::make_shared<const LieAlgebra>(rank), term_guard) {}

UEAElement EnvelopingAlgebra::generator(std::size_t idx) const {
  if (idx >= g_->dim()) throw std::invalid_argument("generator index out of range");
  UEAElement out;
  out.add_term(Monomial{{static_cast<std::uint8_t>(idx)}}, 1);
  return out;
}

void EnvelopingAlgebra::check_guard(const UEAElement& r) const {
  if (r.size() > guard_)
    throw GuardExceeded("term guard exceeded: " + std::to_string(r.size()) + " > " + std::to_string(guard_));
}

std::size_t EnvelopingAlgebra::cache_size() const {
  std::shared_lock lock(cache_mutex_);
  return cache_.size();
}

UEAElement EnvelopingAlgebra::mul_monomial_generator(const Monomial& m, std::size_t g) const {
  if (m.empty() || m.letters.back() <= g) {
    Monomial out = m;
    out.letters.push_back(static_cast<std::uint8_t>(g));
    UEAElement r;
    r.add_term(out, 1);
    return r;
  }
  std::vector<std::uint8_t> key = m.letters;
  key.push_back(static_cast<std::uint8_t>(g));
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  // M' x g = (M' g) x + M' [x, g]
  Monomial prefix = m;
  const std::size_t x = prefix.letters.back();
  prefix.letters.pop_back();
  UEAElement result = mul_element_generator(mul_monomial_generator(prefix, g), x);
  for (const auto& [z, c] : g_->bracket(x, g)) result.axpy(c, mul_monomial_generator(prefix, z));
  check_guard(result);
  {
    std::unique_lock lock(cache_mutex_);
    cache_.emplace(std::move(key), result);
  }
  return result;
}

UEAElement EnvelopingAlgebra::mul_element_generator(const UEAElement& a, std::size_t g) const {
  UEAElement out;
  for (const auto& [m, c] : a.terms()) out.axpy(c, mul_monomial_generator(m, g));
  check_guard(out);
  return out;
}

UEAElement EnvelopingAlgebra::multiply(const UEAElement& a, const UEAElement& b) const {
  UEAElement out;
  for (const auto& [mb, cb] : b.terms()) {
    UEAElement partial = a;
    for (auto letter : mb.letters) partial = mul_element_generator(partial, letter);
    out.axpy(cb, partial);
    check_guard(out);
  }
  return out;
}

UEAElement EnvelopingAlgebra::power(const UEAElement& a, unsigned n) const {
  UEAElement out = one();
  for (unsigned i = 0; i < n; ++i) out = multiply(out, a);
  return out;
}

UEAElement EnvelopingAlgebra::word(const std::vector<std::size_t>& letters) const {
  UEAElement out = one();
  for (auto x : letters) {
    if (x >= g_->dim()) throw std::invalid_argument("word: index out of range");
    out = mul_element_generator(out, x);
  }
  return out;
}

UEAElement EnvelopingAlgebra::ad(const UEAElement& x, const UEAElement& y) const {
  return multiply(x, y) - multiply(y, x);
}

UEAElement EnvelopingAlgebra::ad_power(std::size_t x, unsigned n, const UEAElement& y) const {
  UEAElement gx = generator(x);
  UEAElement out = y;
  for (unsigned i = 0; i < n && !out.is_zero(); ++i) out = ad(gx, out);
  return out;
}

UEAElement EnvelopingAlgebra::ad_word(const std::vector<std::size_t>& letters, const UEAElement& y) const {
  UEAElement out = y;
  for (auto it = letters.rbegin(); it != letters.rend() && !out.is_zero(); ++it) out = ad(generator(*it), out);
  return out;
}

UEAElement EnvelopingAlgebra::ad_power_multinomial(std::size_t x, unsigned n,
                                                   const std::vector<UEAElement>& factors) const {
  if (factors.empty()) return n == 0 ? one() : UEAElement{};
  const std::size_t m = factors.size();
  // table[i][k] = (ad x)^k Y_i
  std::vector<std::vector<UEAElement>> table(m);
  for (std::size_t i = 0; i < m; ++i) {
    table[i].push_back(factors[i]);
    for (unsigned k = 1; k <= n; ++k) table[i].push_back(ad(generator(x), table[i].back()));
  }
  UEAElement out;
  std::vector<unsigned> parts(m, 0);
  // Enumerate compositions of n into m parts.
  auto recurse = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == m) {
      parts[pos] = remaining;
      UEAElement term = one();
      for (std::size_t i = 0; i < m && !term.is_zero(); ++i) {
        const UEAElement& factor = table[i][parts[i]];
        if (factor.is_zero()) {
          term = UEAElement{};
          break;
        }
        term = multiply(term, factor);
      }
      out.axpy(Rational(multinomial(parts)), term);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      parts[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  recurse(recurse, 0, n);
  return out;
}

UEAElement EnvelopingAlgebra::reduce_mod_nplus(const UEAElement& r) const {
  UEAElement out;
  for (const auto& [m, c] : r.terms())
    if (m.empty() || !g_->is_e(m.letters.back())) out.add_term(m, c);
  return out;
}

Root EnvelopingAlgebra::monomial_weight(const Monomial& m) const {
  Root w{std::vector<int>(g_->rank(), 0)};
  for (auto x : m.letters) w = w + g_->weight(x);
  return w;
}

GradedWeight EnvelopingAlgebra::weight_of(const UEAElement& r) const {
  GradedWeight out{false, Root{std::vector<int>(g_->rank(), 0)}};
  bool first = true;
  for (const auto& [m, c] : r.terms()) {
    Root w = monomial_weight(m);
    if (first) {
      out.weight = w;
      first = false;
    } else if (w != out.weight) {
      out.mixed = true;
      return out;
    }
  }
  return out;
}

CartanPolynomial EnvelopingAlgebra::hw_polynomial(const UEAElement& r) const {
  GradedWeight w = weight_of(r);
  if (w.mixed || !w.weight.is_zero()) throw std::invalid_argument("hw_polynomial: element does not have weight zero");
  const std::size_t l = g_->rank();
  CartanPolynomial p(l);
  for (const auto& [m, c] : r.terms()) {
    CartanPolynomial::Exponents e(l, 0);
    bool pure_cartan = true;
    for (auto x : m.letters) {
      if (!g_->is_h(x)) {
        pure_cartan = false;
        break;
      }
      ++e[x - g_->num_positive()];
    }
    if (pure_cartan) p.add_term(e, c);
  }
  return p;
}

UEAElement EnvelopingAlgebra::from_cartan(const CartanPolynomial& p) const {
  if (p.rank() != g_->rank()) throw std::invalid_argument("from_cartan: rank mismatch");
  UEAElement out;
  for (const auto& [e, c] : p.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) m.letters.push_back(static_cast<std::uint8_t>(g_->h_index(i + 1)));
    out.add_term(m, c);
  }
  return out;
}

std::string EnvelopingAlgebra::to_string(const UEAElement& r) const {
  if (r.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : r.terms()) {
    Rational a = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    bool wrote = false;
    if (a != 1 || m.empty()) {
      os << to_display_string(a);
      wrote = true;
    }
    for (const auto& [x, p] : m.factors()) {
      if (wrote) os << '*';
      os << g_->label(x);
      if (p > 1) os << '^' << p;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace blvoa
