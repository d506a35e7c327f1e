#include "blvoa/rational.hpp"

#include <cctype>

namespace blvoa {

std::string to_fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_display_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return to_fraction_string(c);
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  if (pos == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  Integer value(std::string(text.substr(pos)), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text, text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && sgn(q) <= 0; }

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer falling_factorial(long n, unsigned k) {
  Integer out = 1;
  for (unsigned i = 0; i < k; ++i) out *= (n - static_cast<long>(i));
  return out;
}

Integer multinomial(const std::vector<unsigned>& parts) {
  unsigned total = 0;
  for (unsigned p : parts) total += p;
  Integer out = factorial(total);
  for (unsigned p : parts) out /= factorial(p);
  return out;
}

}  // namespace blvoa
