#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alf {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// p/q in lowest terms.
Rational ratio(long numerator, long denominator = 1);

/// Exact "p/q" rendering; the denominator is always present ("3/1").
std::string to_fraction(const Rational& value);

/// Human-oriented rendering: integers without denominator ("3", "-1/2").
std::string to_display(const Rational& value);

/// Accepts "p/q", "p" and leading/trailing whitespace. Throws
/// std::invalid_argument on anything else or a zero denominator.
Rational parse_fraction(std::string_view text);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

bool is_zero(std::span<const Rational> v);
bool is_integral(std::span<const Rational> v);

/// Rescales v by a positive rational so that its entries become coprime
/// integers. The zero vector is left untouched.
void make_primitive(std::span<Rational> v);

/// Lexicographic comparison of equal-length vectors.
bool lex_less(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace alf
