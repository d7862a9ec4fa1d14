#include "alf/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace alf {

Rational ratio(long numerator, long denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_fraction(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_display(const Rational& value) { return value.get_str(); }

Rational parse_fraction(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string num_str(num);
  if (!num_str.empty() && num_str.front() == '+') num_str.erase(0, 1);
  mpz_class p(num_str), q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational result(p, q);
  result.canonicalize();
  return result;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
  return sum;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

bool is_integral(std::span<const Rational> v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

void make_primitive(std::span<Rational> v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v)
    if (sgn(x) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  mpz_class gcd_num = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_class scaled = x.get_num() * (lcm_den / x.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  if (gcd_num == 0) return;
  Rational factor(lcm_den, gcd_num);
  factor.canonicalize();
  for (auto& x : v)
    if (sgn(x) != 0) x *= factor;
}

bool lex_less(std::span<const Rational> a, std::span<const Rational> b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace alf
