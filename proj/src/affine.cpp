#include "blvoa/affine.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace blvoa {

AffineBracket affine_bracket(const LieAlgebra& g, const AffineGenerator& x, const AffineGenerator& y) {
  AffineBracket out;
  if (x.central || y.central) return out;
  out.loop_part = g.bracket(x.base, y.base);
  out.mode = x.mode + y.mode;
  if (out.mode == 0 && x.mode != 0) out.central = Rational(x.mode) * g.form(x.base, y.base);
  return out;
}

void VermaVector::add_term(const CreationMonomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

VermaVector& VermaVector::axpy(const Rational& a, const VermaVector& o) {
  if (sgn(a) == 0) return *this;
  for (const auto& [m, c] : o.terms_) add_term(m, a * c);
  return *this;
}

VermaVector VermaVector::operator+(const VermaVector& o) const {
  VermaVector r = *this;
  return r.axpy(1, o);
}

VermaVector VermaVector::operator-(const VermaVector& o) const {
  VermaVector r = *this;
  return r.axpy(-1, o);
}

VermaVector VermaVector::operator*(const Rational& s) const {
  VermaVector r;
  return r.axpy(s, *this);
}

VermaModule::VermaModule(std::shared_ptr<const LieAlgebra> g, const Rational& level, std::size_t term_guard)
    : g_(std::move(g)), level_(level), guard_(term_guard) {
  if (g_->dim() > 255) throw std::invalid_argument("rank too large for creation-monomial encoding");
}

void VermaModule::check_guard(const VermaVector& v) const {
  if (v.size() > guard_)
    throw GuardExceeded("term guard exceeded: " + std::to_string(v.size()) + " > " + std::to_string(guard_));
}

namespace {

std::string cache_key(std::size_t x, int m, const CreationMonomial& mono, std::size_t start) {
  std::string key;
  key.reserve(4 + 5 * (mono.size() - start));
  auto put_int = [&](int v) { key.append(reinterpret_cast<const char*>(&v), sizeof v); };
  key.push_back(static_cast<char>(x));
  put_int(m);
  for (std::size_t s = start; s < mono.size(); ++s) {
    key.push_back(static_cast<char>(mono[s].index));
    put_int(mono[s].mode);
  }
  return key;
}

}  // namespace

// x(m) y_start(n) ... 1, with the monomial suffix already normal-ordered.
VermaVector VermaModule::apply_loop(std::size_t x, int m, const CreationMonomial& mono, std::size_t start) const {
  VermaVector out;
  const CreationOp self{m, static_cast<std::uint8_t>(x)};
  if (start == mono.size()) {
    if (m < 0) out.add_term({self}, 1);
    return out;
  }
  if (m < 0 && !(mono[start] < self)) {
    CreationMonomial w;
    w.reserve(mono.size() - start + 1);
    w.push_back(self);
    w.insert(w.end(), mono.begin() + static_cast<std::ptrdiff_t>(start), mono.end());
    out.add_term(w, 1);
    return out;
  }

  const std::string key = cache_key(x, m, mono, start);
  {
    std::shared_lock lock(cache_mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }

  const CreationOp y = mono[start];
  // y(n) x(m) rest
  VermaVector moved = apply_loop(x, m, mono, start + 1);
  for (const auto& [w, c] : moved.terms()) out.axpy(c, apply_loop(y.index, y.mode, w, 0));
  // [x(m), y(n)] rest
  AffineBracket br = affine_bracket(*g_, AffineGenerator::loop(x, m), AffineGenerator::loop(y.index, y.mode));
  for (const auto& [z, c] : br.loop_part) out.axpy(c, apply_loop(z, br.mode, mono, start + 1));
  if (sgn(br.central) != 0) {
    CreationMonomial rest(mono.begin() + static_cast<std::ptrdiff_t>(start) + 1, mono.end());
    out.add_term(rest, br.central * level_);
  }
  check_guard(out);

  std::unique_lock lock(cache_mutex_);
  cache_.emplace(key, out);
  return out;
}

VermaVector VermaModule::apply(const AffineGenerator& x, const VermaVector& v) const {
  if (x.central) return v * level_;
  VermaVector out;
  for (const auto& [mono, c] : v.terms()) out.axpy(c, apply_loop(x.base, x.mode, mono, 0));
  check_guard(out);
  return out;
}

VermaVector VermaModule::apply_word(const std::vector<AffineGenerator>& word, const VermaVector& v) const {
  VermaVector out = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = apply(*it, out);
  return out;
}

VermaWeight VermaModule::weight_of(const VermaVector& v) const {
  VermaWeight w;
  w.finite = Root{std::vector<int>(g_->rank(), 0)};
  bool first = true;
  for (const auto& [mono, c] : v.terms()) {
    Root fin{std::vector<int>(g_->rank(), 0)};
    int delta = 0;
    for (const auto& op : mono) {
      fin = fin + g_->weight(op.index);
      delta += op.mode;
    }
    if (first) {
      w.finite = fin;
      w.delta = delta;
      first = false;
    } else if (!(fin == w.finite) || delta != w.delta) {
      w.mixed = true;
    }
  }
  return w;
}

std::string VermaModule::to_string(const VermaVector& v) const {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : v.terms()) {
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (a != 1 || mono.empty()) os << to_display_string(a) << (mono.empty() ? "" : "*");
    for (std::size_t s = 0; s < mono.size(); ++s) {
      if (s) os << " ";
      os << g_->label(mono[s].index) << "(" << mono[s].mode << ")";
    }
    os << (mono.empty() ? "" : " ") << "1";
  }
  return os.str();
}

Rational critical_level(std::size_t l, unsigned n) {
  return Rational(static_cast<long>(n)) - static_cast<long>(l) + Rational(1, 2);
}

VermaVector build_singular_candidate(const VermaModule& N, unsigned n) {
  const LieAlgebra& g = N.lie();
  const std::size_t l = g.rank();
  const Root e1 = Root::epsilon(l, 1);
  VermaVector v = VermaVector::vacuum();
  for (unsigned step = 0; step < n; ++step) {
    auto e = [&](const Root& a) { return AffineGenerator::loop(g.e_index(a), -1); };
    VermaVector next = N.apply_word({e(e1), e(e1)}, v) * Rational(-1, 4);
    for (std::size_t j = 2; j <= l; ++j) {
      const Root ej = Root::epsilon(l, j);
      next.axpy(1, N.apply_word({e(e1 - ej), e(e1 + ej)}, v));
    }
    v = std::move(next);
  }
  return v;
}

std::size_t SingularReport::residual_terms() const {
  std::size_t total = 0;
  for (const auto& [label, r] : residuals) total += r.size();
  return total;
}

SingularReport check_singular(std::size_t l, unsigned n, std::optional<Rational> level, std::size_t term_guard) {
  auto g = std::make_shared<const LieAlgebra>(l);
  SingularReport report;
  report.level = level ? *level : critical_level(l, n);
  VermaModule N(g, report.level, term_guard);
  report.vector = build_singular_candidate(N, n);
  auto gens = g->chevalley_generators();
  for (std::size_t i = 0; i < l; ++i)
    report.residuals.emplace_back("e" + std::to_string(i + 1) + "(0)",
                                  N.apply(AffineGenerator::loop(gens[i].e, 0), report.vector));
  const Root& theta = g->roots().highest_root();
  report.residuals.emplace_back("f[" + theta.label() + "](1)",
                                N.apply(AffineGenerator::loop(g->f_index(theta), 1), report.vector));
  report.singular = report.residual_terms() == 0;
  return report;
}

UEAElement fz_image(const EnvelopingAlgebra& U, const VermaVector& v) {
  UEAElement out;
  for (const auto& [mono, c] : v.terms()) {
    std::vector<std::size_t> word;
    int shift = 0;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
      if (it->mode >= 0) throw std::invalid_argument("fz_image needs negative modes");
      shift += -it->mode - 1;
      word.push_back(it->index);
    }
    out.axpy(shift % 2 ? -c : c, U.word(word));
  }
  return out;
}

}  // namespace blvoa
