#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace wheelzeta {

using BigInt = mpz_class;

std::string to_decimal(const BigInt& v);
BigInt parse_decimal(std::string_view s);

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

/// a / b, throwing DivisionError unless b divides a.
BigInt exact_div(const BigInt& a, const BigInt& b);

BigInt big_gcd(const BigInt& a, const BigInt& b);

/// Narrowing conversion; throws InvalidArgument when v does not fit.
std::int64_t to_int64(const BigInt& v);

} // namespace wheelzeta
