#include "lorentzvol/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace lorentzvol {

PrecisionContext::PrecisionContext(int bits) : mantissa_bits(bits) {
  if (bits < kMinBits)
    throw std::invalid_argument("PrecisionContext: mantissa_bits must be >= 53, got " +
                                std::to_string(bits));
}

BigFloat::BigFloat(int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(double v, int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(long v, int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(unsigned long v, int bits) {
  mpfr_init2(v_, bits);
  mpfr_set_ui(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::from_mpz(const mpz_t z, int bits) {
  BigFloat r(bits);
  mpfr_set_z(r.v_, z, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::at_precision(int bits) const {
  BigFloat r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(digits + 32);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Re", digits, v_);
  return std::string(buf.data());
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

namespace {
inline int wider(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}
BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(wider(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigFloat log(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_log(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigFloat exp(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_exp(r.v_, a.v_, MPFR_RNDN);
  return r;
}
BigFloat pow(const BigFloat& base, const BigFloat& exponent) {
  BigFloat r(wider(base, exponent));
  mpfr_pow(r.v_, base.v_, exponent.v_, MPFR_RNDN);
  return r;
}
BigFloat pow_ui(const BigFloat& base, unsigned long exponent) {
  BigFloat r(base.precision());
  mpfr_pow_ui(r.v_, base.v_, exponent, MPFR_RNDN);
  return r;
}
BigFloat ldexp2(const BigFloat& a, long e) {
  BigFloat r(a.precision());
  mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}
BigFloat lngamma(const BigFloat& a) {
  if (a.sign() <= 0) throw std::invalid_argument("lngamma: argument must be positive");
  BigFloat r(a.precision());
  mpfr_lngamma(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat factorial_big(unsigned long n, int bits) {
  mpz_t z;
  mpz_init(z);
  mpz_fac_ui(z, n);
  BigFloat r = BigFloat::from_mpz(z, bits);
  mpz_clear(z);
  return r;
}

BigFloat binomial_big(unsigned long n, unsigned long k, int bits) {
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, n, k);
  BigFloat r = BigFloat::from_mpz(z, bits);
  mpz_clear(z);
  return r;
}

}  // namespace lorentzvol
