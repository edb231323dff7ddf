#ifndef WORDSPACE_BIGMATH_HPP
#define WORDSPACE_BIGMATH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace wordspace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// floor(q) as an integer; exact for negative values too.
BigInt floor_rat(const BigRat& q);

BigInt pow_int(const BigInt& base, unsigned exp);
BigRat pow_rat(const BigRat& base, unsigned exp);

/// log2 of a positive integer, accurate to double precision regardless of size.
double log2_int(const BigInt& n);

/// Accepts "num/den", plain integers, and decimal literals ("0.35" -> 7/20).
BigRat parse_rational(std::string_view text);

/// Decimal approximation; safe for ratios whose double conversion would overflow.
double rat_to_double(const BigRat& q);

std::string rat_to_string(const BigRat& q);

}  // namespace wordspace

#endif
