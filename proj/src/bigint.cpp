#include "parkfn/bigint.hpp"

#include "parkfn/error.hpp"

namespace parkfn {

big_int ipow(const big_int& base, unsigned long exp) {
  big_int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

big_int ipow(long base, unsigned long exp) { return ipow(big_int(base), exp); }

big_rational rpow(const big_rational& base, long exp) {
  if (exp >= 0) {
    big_rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exp));
    out.canonicalize();
    return out;
  }
  if (base == 0) throw parking_error(errc::domain_error, "zero raised to a negative power");
  big_rational inv = 1 / base;
  return rpow(inv, -exp);
}

big_int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  big_int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

big_int factorial(unsigned long n) {
  big_int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_decimal(const big_rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str(10);
  return v.get_str(10);
}

big_rational ratio(long num, long den) {
  if (den == 0) throw parking_error(errc::domain_error, "zero denominator");
  big_rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace parkfn
