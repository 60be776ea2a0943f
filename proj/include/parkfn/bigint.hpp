#pragma once

#include <gmpxx.h>

#include <string>

namespace parkfn {

// Every count in the library is exact. Signed, because the alternating sums
// pass through negative partial terms.
using big_int = mpz_class;
using big_rational = mpq_class;

/// base^exp with 0^0 = 1.
big_int ipow(const big_int& base, unsigned long exp);
big_int ipow(long base, unsigned long exp);

/// base^exp over the rationals; a negative exponent needs a nonzero base.
/// 0^0 = 1.
big_rational rpow(const big_rational& base, long exp);

/// num/den in lowest terms; den must be nonzero.
big_rational ratio(long num, long den);

/// C(n, k), zero when k > n.
big_int binomial(unsigned long n, unsigned long k);

big_int factorial(unsigned long n);

inline std::string to_decimal(const big_int& v) { return v.get_str(10); }
std::string to_decimal(const big_rational& v);

}  // namespace parkfn
